from pathlib import Path

import pytest

from codemorph.apps.extractor.models import read_source
from codemorph.apps.extractor.parsing import parse_file
from codemorph.apps.prompts.builder import estimate_tokens, gen_prompt, write_audit
from codemorph.apps.prompts.exceptions import ContextOverflow, EmptyTargets, ForeignTarget
from codemorph.apps.prompts.templates import SYSTEM
from codemorph.apps.strategies.catalog import get_strategy

FIXTURES = Path(__file__).parent / 'fixtures'
TOY_SOURCES = Path(__file__).parents[1] / 'variants' / 'fixtures' / 'toy_project' / 'src'


def context(path):
    return parse_file(read_source(path))


@pytest.mark.parametrize('source, strategy, names, golden', [
    (FIXTURES / 'sources' / 'antisandbox.cpp', 'optimization', ['AntiSandbox'],
     'antisandbox_optimization.txt'),
    (TOY_SOURCES / 'mathops.c', 'quality', ['add', 'scale'], 'mathops_quality.txt'),
    (TOY_SOURCES / 'main.c', 'reusability', ['checksum'], 'checksum_reusability.txt'),
])
def test_golden_prompts(source, strategy, names, golden):
    ctx = context(source)
    targets = [ctx.function(name) for name in names]

    bundle = gen_prompt(get_strategy(strategy), targets, ctx)

    expected = (FIXTURES / 'golden' / golden).read_text(encoding='utf-8')
    assert bundle.render() == expected


def test_antisandbox_prompt_sections():
    ctx = context(FIXTURES / 'sources' / 'antisandbox.cpp')
    bundle = gen_prompt(get_strategy('optimization'), [ctx.function('AntiSandbox')], ctx)

    assert bundle.system_text == SYSTEM
    assert '***AntiSandbox()***' in bundle.user_text
    assert bundle.target_names == ('AntiSandbox',)
    sentinels = ['GENERATE one VARIANT', '1. Remove code redundancies.',
                 'MUST MAINTAIN the same FUNCTIONALITY', 'CRUCIAL instructions below',
                 'Here is the code']
    offsets = [bundle.user_text.index(sentinel) for sentinel in sentinels]
    assert offsets == sorted(offsets)
    assert '```cpp' in bundle.user_text
    # comments between top-level items are not quoted
    assert 'startup, install' not in bundle.user_text


def test_two_targets_are_counted_and_listed(parse):
    ctx = parse('int g;\n\nint b(void)\n{\n    return 2;\n}\n\nint a(void)\n{\n    return g;\n}\n')

    # targets are emitted in file order whatever order they are passed in
    bundle = gen_prompt(get_strategy('security'), [ctx.function('a'), ctx.function('b')], ctx)

    assert '2 global function definition(s)' in bundle.user_text
    assert '***b(), a()***' in bundle.user_text
    assert bundle.target_names == ('b', 'a')
    for function in ctx.functions:
        assert function.body_text in bundle.user_text
    assert bundle.user_text.index('int b(void)') < bundle.user_text.index('int a(void)')


def test_token_estimate_is_additive(parse):
    ctx = parse('void f(void){}\n')
    bundle = gen_prompt(get_strategy('quality'), [ctx.function('f')], ctx)

    assert bundle.token_estimate == (estimate_tokens(bundle.system_text)
                                     + estimate_tokens(bundle.user_text))


def test_estimate_tokens():
    assert estimate_tokens('') == 0
    assert estimate_tokens('abcdefgh') == 2
    assert estimate_tokens('abcdefghi') == 3
    x, y = 'int main(void)', '{ return 0; }'
    assert estimate_tokens(x + '\n\n' + y) <= estimate_tokens(x) + estimate_tokens(y) + 1


def test_prompts_are_deterministic(parse):
    ctx = parse('int f(int x)\n{\n    return x;\n}\n')
    first = gen_prompt(get_strategy('obfuscation'), [ctx.function('f')], ctx)
    second = gen_prompt(get_strategy('obfuscation'), [ctx.function('f')], ctx)

    assert first == second
    assert first.digest == second.digest
    assert first.digest != gen_prompt(get_strategy('quality'), [ctx.function('f')], ctx).digest


def test_empty_targets(parse):
    ctx = parse('int f(void){return 0;}\n')

    with pytest.raises(EmptyTargets):
        gen_prompt(get_strategy('quality'), [], ctx)


def test_foreign_target(parse):
    ctx = parse('int f(void){return 0;}\n')
    other = parse('int g(void){return 0;}\n')

    with pytest.raises(ForeignTarget) as excinfo:
        gen_prompt(get_strategy('quality'), [other.function('g')], ctx)
    assert excinfo.value.code == 'foreign_target'
    assert excinfo.value.details == {'function': 'g', 'path': '<test>'}


def test_context_overflow(parse):
    ctx = parse('int f(void){return 0;}\n')

    with pytest.raises(ContextOverflow) as excinfo:
        gen_prompt(get_strategy('quality'), [ctx.function('f')], ctx, context_window=10)
    assert excinfo.value.details['window'] == 10


def test_context_window_setting(parse, settings):
    settings.CODEMORPH_CONTEXT_WINDOW = 50
    ctx = parse('int f(void){return 0;}\n')

    with pytest.raises(ContextOverflow):
        gen_prompt(get_strategy('quality'), [ctx.function('f')], ctx)


def test_write_audit(parse, tmp_path):
    ctx = parse('int f(void){return 0;}\n')
    bundle = gen_prompt(get_strategy('quality'), [ctx.function('f')], ctx)

    path = write_audit(bundle, tmp_path, 'src/f.c', 1)

    assert path == tmp_path / 'prompts' / 'src/f.c' / 'quality' / '1.txt'
    assert path.read_text(encoding='utf-8') == bundle.render()
