from pathlib import Path

import pytest

from codemorph.apps.extractor.exceptions import UnsupportedLanguage
from codemorph.apps.extractor.models import Language, SegmentKind, SourceFile, encode, read_source
from codemorph.apps.extractor.parsing import count_function_nodes, parse_file, reconstruct

CORPUS = Path(__file__).parent / 'fixtures' / 'corpus'
CORPUS_FILES = sorted(p for p in CORPUS.iterdir() if p.is_file())

FUNCTION_NAMES = {
    'hello.c': ['main'],
    'minimal.c': ['main'],
    'globals.c': ['bump', 'distance'],
    'comments.c': ['first', 'second'],
    'stack.c': ['stack_new', 'stack_push', 'stack_pop', 'stack_free'],
    'ifdef.c': ['pause_ms', 'pause_ms', 'run'],
    'function_pointers.c': ['plus', 'minus', 'pick', 'select_op'],
    'static_inline.c': ['rotl', 'mix', 'hash_bytes'],
    'enums.c': ['color_name'],
    'prototypes_only.h': [],
    'empty.c': [],
    'crlf.c': ['crlf_answer', 'crlf_twice'],
    'latin1.c': ['greet'],
    'variadic.c': ['sum_all', 'log_line'],
    'vector_math.cpp': ['operator+', 'total_length'],
    'namespaces.cpp': ['upper', 'width', 'hidden_helper', 'visible'],
    'extern_c.cpp': ['c_add', 'c_print', 'c_single', 'cpp_only'],
    'classes.cpp': ['Greeter::greet', 'main'],
    'templates.cpp': ['clamp_to', 'clamp_percent', 'clamp_all'],
    'lambdas.cpp': ['count_if_above', 'make_divisible'],
    'overloads.cpp': ['describe', 'describe', 'describe', 'operator=='],
    'raw_strings.cpp': ['braces', 'closing'],
}


def test_corpus_is_complete():
    assert len(CORPUS_FILES) >= 20
    assert sorted(FUNCTION_NAMES) == sorted(p.name for p in CORPUS_FILES)


@pytest.mark.parametrize('path', CORPUS_FILES, ids=lambda p: p.name)
def test_corpus_round_trip(path):
    src = read_source(path)
    ctx = parse_file(src)

    assert encode(reconstruct(ctx)) == path.read_bytes()
    assert reconstruct(ctx) == src.text


@pytest.mark.parametrize('path', CORPUS_FILES, ids=lambda p: p.name)
def test_corpus_functions(path):
    src = read_source(path)
    ctx = parse_file(src)

    assert [f.name for f in ctx.functions] == FUNCTION_NAMES[path.name]
    assert len(ctx.functions) == count_function_nodes(src.data, src.language)
    assert [f.ordinal for f in ctx.functions] == list(range(1, len(ctx.functions) + 1))
    for function in ctx.functions:
        start, end = function.body_span
        assert src.data[start:end] == encode(function.body_text)
    spans = sorted(f.body_span for f in ctx.functions)
    assert all(a[1] <= b[0] for a, b in zip(spans, spans[1:]))


@pytest.mark.parametrize('path', CORPUS_FILES, ids=lambda p: p.name)
def test_segments_cover_every_byte(path):
    src = read_source(path)
    ctx = parse_file(src)

    cursor = 0
    for segment in ctx.segments:
        assert segment.start == cursor
        cursor = segment.end
    assert cursor == len(src.data)
    for segment in ctx.segments:
        if segment.kind in (SegmentKind.HEADER, SegmentKind.GLOBAL):
            assert segment.start not in {f.body_span[0] for f in ctx.functions}


def test_headers_globals_and_functions(parse):
    ctx = parse('#include <stdio.h>\n\nint g;\n\nint a(void)\n{\n    return g;\n}\n\n'
                'int b(int x)\n{\n    return a() + x;\n}\n')

    assert ctx.headers == ['#include <stdio.h>']
    assert ctx.globals == ['int g;']
    assert [(f.name, f.ordinal) for f in ctx.functions] == [('a', 1), ('b', 2)]
    assert ctx.functions[1].qualified_signature == 'int b(int x)'
    assert 'g' in ctx.symbols


def test_empty_file(parse):
    ctx = parse('')

    assert ctx.headers == []
    assert ctx.globals == []
    assert ctx.functions == ()
    assert reconstruct(ctx) == ''


def test_minimal_program(parse):
    ctx = parse('int main(){return 0;}')

    assert ctx.headers == []
    assert ctx.globals == []
    assert [f.name for f in ctx.functions] == ['main']


def test_trailing_newline_variations(parse):
    for text in ('int f(void){return 1;}', 'int f(void){return 1;}\n',
                 'int f(void){return 1;}\n\n\n', '\n\nint f(void){return 1;}  \t'):
        assert reconstruct(parse(text)) == text


def test_leading_comment_is_not_part_of_the_function(parse):
    ctx = parse('/* adds */\nint add(int a, int b)\n{\n    return a + b;\n}\n')

    assert ctx.functions[0].body_text.startswith('int add')


def test_member_functions_stay_in_globals(parse):
    ctx = parse('struct S {\n    int get() const { return 1; }\n};\n\nint free_fn() { return 2; }\n',
                language='cpp')

    assert [f.name for f in ctx.functions] == ['free_fn']
    assert any('get()' in text for text in ctx.globals)


def test_function_templates_are_functions(parse):
    text = ('template <typename T>\nT twice(T x)\n{\n    return x + x;\n}\n\n'
            'template <typename T>\nstruct Box {\n    T value;\n};\n\n'
            'template <typename T>\nT half(T x);\n\n'
            'int once(int x)\n{\n    return twice(x) / 2;\n}\n')

    ctx = parse(text, language='cpp')

    assert [f.name for f in ctx.functions] == ['twice', 'once']
    twice = ctx.functions[0]
    assert twice.body_text == 'template <typename T>\nT twice(T x)\n{\n    return x + x;\n}'
    assert twice.qualified_signature == 'template <typename T>\nT twice(T x)'
    assert twice.prototype == 'template <typename T>\nT twice(T x);'
    assert ctx.globals == ['template <typename T>\nstruct Box {\n    T value;\n};',
                           'template <typename T>\nT half(T x);']
    assert count_function_nodes(ctx.file.data, ctx.language) == 2
    assert reconstruct(ctx) == text


def test_enclosures():
    ctx = parse_file(read_source(CORPUS / 'namespaces.cpp'))
    enclosures = {f.name: f.enclosure for f in ctx.functions}

    assert enclosures == {
        'upper': 'namespace text',
        'width': 'namespace text > namespace detail',
        'hidden_helper': 'anonymous namespace',
        'visible': '',
    }

    ctx = parse_file(read_source(CORPUS / 'extern_c.cpp'))
    assert [f.enclosure for f in ctx.functions] == ['extern "C"'] * 3 + ['']

    ctx = parse_file(read_source(CORPUS / 'ifdef.c'))
    assert [f.enclosure for f in ctx.functions] == ['preprocessor conditional'] * 2 + ['']


def test_lossy_decoding_keeps_bytes():
    src = read_source(CORPUS / 'latin1.c')

    assert src.lossy is True
    assert src.data == (CORPUS / 'latin1.c').read_bytes()
    assert encode(reconstruct(parse_file(src))) == src.data


def test_overloads_resolve_by_signature():
    ctx = parse_file(read_source(CORPUS / 'overloads.cpp'))

    found = ctx.function('describe', 'int describe(double value)')
    assert found.ordinal == 3
    assert ctx.function('describe').ordinal == 1
    assert ctx.function('missing') is None


def test_language_labels():
    assert Language.from_label('C++') == Language.CPP
    assert Language.from_label('cxx') == Language.CPP
    assert Language.from_label(' c ') == Language.C
    assert Language.from_path('src/a.cc') == Language.CPP
    assert Language.from_path('include/a.h') == Language.C

    with pytest.raises(UnsupportedLanguage):
        Language.from_label('rust')
    with pytest.raises(UnsupportedLanguage):
        Language.from_path('main.rs')


def test_error_nodes_are_tolerated(parse):
    text = 'int ok(void)\n{\n    return 1;\n}\n\nint broken(void)\n{\n    return 1 +;\n}\n'
    ctx = parse(text)

    assert reconstruct(ctx) == text
    assert ctx.functions[0].name == 'ok'


def test_from_text_round_trip():
    src = SourceFile.from_text('int x;\n', Language.C)

    assert src.data == b'int x;\n'
    assert src.lossy is False
