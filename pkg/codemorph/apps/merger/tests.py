import random
from collections import Counter
from pathlib import Path

import pytest

from codemorph.apps.extractor.models import SourceFile, read_source
from codemorph.apps.extractor.parsing import parse_file, reconstruct
from codemorph.apps.merger.exceptions import HelperCollision, NameMismatch, TargetNotFound
from codemorph.apps.merger.merge import (
    build_transformed, extract_new_headers, header_key, merge, write_merged)
from codemorph.apps.merger.models import Provenance

ANTISANDBOX = Path(__file__).parents[1] / 'prompts' / 'fixtures' / 'sources' / 'antisandbox.cpp'

SIMPLE = '#include <stdio.h>\n\nint g;\n\nint a(void)\n{\n    return g;\n}\n\nint b(int x)\n{\n    return a() + x;\n}\n'

ANTISANDBOX_VARIANT = '''#include<algorithm>
#include<cctype>
#include "includes.h"

BOOL AntiSandbox()
{
    const char *users[] = {"sandbox", "honey", "vmware", "currentuser", "nepenthes"};
    char szUser[128];
    DWORD size = sizeof(szUser);

    GetUserName(szUser, &size);
    std::transform(szUser, szUser + strlen(szUser), szUser, ::tolower);

    return std::any_of(std::begin(users), std::end(users),
                       [&](const char *u) { return strstr(szUser, u) != nullptr; });
}'''


def test_identity_merge_is_byte_exact(parse):
    ctx = parse(SIMPLE)
    transformed = [build_transformed(ctx, f, f.body_text) for f in ctx.functions]

    merged = merge(ctx, transformed)

    assert merged.text == SIMPLE
    assert merged.modified_ordinals == {1, 2}
    assert merged.new_headers == ()


def test_nothing_to_merge(parse):
    ctx = parse(SIMPLE)

    merged = merge(ctx, [])

    assert merged.text == SIMPLE
    assert set(merged.provenance.values()) == {Provenance.ORIGINAL}


def test_only_the_target_changes(parse):
    ctx = parse(SIMPLE)
    replacement = 'int b(int x)\n{\n    return x + a();\n}'

    merged = merge(ctx, [build_transformed(ctx, ctx.function('b'), replacement)])

    assert merged.text == SIMPLE.replace('return a() + x;', 'return x + a();')
    assert merged.provenance == {1: Provenance.ORIGINAL, 2: Provenance.TRANSFORMED}
    assert merged.target_names == ('b',)


def test_antisandbox_headers_are_added_once():
    ctx = parse_file(read_source(ANTISANDBOX))
    target = ctx.function('AntiSandbox')

    transformed = build_transformed(ctx, target, ANTISANDBOX_VARIANT)
    merged = merge(ctx, [transformed])

    assert transformed.new_headers == ('#include<algorithm>', '#include<cctype>')
    assert merged.text.startswith('#include "includes.h"\n#include "Confix.h"\n'
                                  '#include<algorithm>\n#include<cctype>\n\n// startup, install\n')
    assert merged.text.count('#include<algorithm>') == 1
    assert merged.text.count('#include "includes.h"') == 1
    assert 'std::any_of' in merged.text
    assert 'CharLower' not in merged.text

    reparsed = parse_file(SourceFile.from_text(merged.text, ctx.language))
    assert [f.name for f in reparsed.functions] == ['AntiSandbox']
    assert reparsed.globals == ctx.globals


def test_function_template_round_trip(parse):
    text = ('#include <vector>\n\ntemplate <typename T>\nT twice(T x)\n{\n    return x + x;\n}\n\n'
            'int once(int x)\n{\n    return twice(x) / 2;\n}\n')
    ctx = parse(text, language='cpp')
    replacement = 'template <typename T>\nT twice(T x)\n{\n    return x * 2;\n}'

    merged = merge(ctx, [build_transformed(ctx, ctx.function('twice'), replacement)])

    assert merged.text == text.replace('return x + x;', 'return x * 2;')
    reparsed = parse(merged.text, language='cpp')
    assert [f.name for f in reparsed.functions] == ['twice', 'once']
    assert reparsed.function('twice').body_text == replacement


def test_extract_new_headers():
    code = '\n#include <algorithm>\n# include "local.h"\n#include<algorithm>\n\nint f();\n'

    stripped, headers = extract_new_headers(code, ['#include "local.h"'])

    assert stripped == 'int f();\n'
    assert headers == ['#include <algorithm>']
    assert header_key('#include<cctype>') == header_key('#  include < cctype >') == 'cctype'
    assert extract_new_headers('int f();', []) == ('int f();', [])


def test_reusability_helpers_are_placed(parse):
    ctx = parse('#include <stdio.h>\n\nint g;\n\nint a(void)\n{\n    return g;\n}\n')
    code = ('#include <string.h>\nstatic int twice(int x)\n{\n    return x * 2;\n}\n\n'
            'int a(void)\n{\n    return twice(g);\n}\n')

    transformed = build_transformed(ctx, ctx.function('a'), code)
    merged = merge(ctx, [transformed])

    assert transformed.helper_names == ('twice',)
    assert merged.text == (
        '#include <stdio.h>\n#include <string.h>\n\nint g;\nstatic int twice(int x);\n\n'
        'static int twice(int x)\n{\n    return x * 2;\n}\n\n'
        'int a(void)\n{\n    return twice(g);\n}\n')
    assert merged.region_names == ('a', 'twice')
    assert [f.name for f in parse(merged.text).functions] == ['twice', 'a']


def test_helpers_dropped_when_not_wanted(parse):
    ctx = parse(SIMPLE)
    code = 'static int one(void) { return 1; }\n\nint a(void)\n{\n    return g * one();\n}'

    transformed = build_transformed(ctx, ctx.function('a'), code, with_helpers=False)

    assert transformed.helper_functions == ()
    assert transformed.replacement_text == 'int a(void)\n{\n    return g * one();\n}'


def test_new_global_goes_with_the_prototypes(parse):
    ctx = parse(SIMPLE)
    code = 'static int calls;\n\nint a(void)\n{\n    return ++calls + g;\n}'

    merged = merge(ctx, [build_transformed(ctx, ctx.function('a'), code)])

    assert merged.text.startswith('#include <stdio.h>\n\nint g;\nstatic int calls;\n\nint a(void)')


def test_identical_globals_and_prototypes_are_stripped(parse):
    ctx = parse(SIMPLE)
    code = 'int g;\nint b(int x);\n\nint a(void)\n{\n    return g + 1;\n}'

    transformed = build_transformed(ctx, ctx.function('a'), code)

    assert transformed.extra_declarations == ()
    assert merge(ctx, [transformed]).text == SIMPLE.replace('return g;', 'return g + 1;')


def test_name_mismatch(parse):
    ctx = parse(SIMPLE)

    with pytest.raises(NameMismatch) as excinfo:
        build_transformed(ctx, ctx.function('a'), 'int renamed(void)\n{\n    return g;\n}')
    assert excinfo.value.details == {'expected': 'a', 'found': ['renamed']}


def test_helper_collisions(parse):
    ctx = parse(SIMPLE)
    code = 'int b(int x)\n{\n    return x;\n}\n\nint a(void)\n{\n    return b(g);\n}'

    with pytest.raises(HelperCollision):
        build_transformed(ctx, ctx.function('a'), code)
    # a batch sibling is not a helper
    assert build_transformed(ctx, ctx.function('a'), code, siblings=('b',)).helper_names == ()

    with pytest.raises(HelperCollision):
        build_transformed(ctx, ctx.function('a'), 'int g = 5;\n\nint a(void)\n{\n    return g;\n}')


def test_helper_defined_by_two_targets(parse):
    ctx = parse(SIMPLE)
    helper = 'static int one(void)\n{\n    return 1;\n}\n\n'
    first = build_transformed(ctx, ctx.function('a'), helper + 'int a(void)\n{\n    return one();\n}')
    second = build_transformed(ctx, ctx.function('b'), helper + 'int b(int x)\n{\n    return one();\n}')

    with pytest.raises(HelperCollision):
        merge(ctx, [first, second])


def test_foreign_target(parse):
    ctx = parse(SIMPLE)
    other = parse('int a(void)\n{\n    return 0;\n}\n')

    with pytest.raises(TargetNotFound):
        merge(ctx, [build_transformed(other, other.function('a'), 'int a(void) { return 1; }')])


def test_merging_again_is_stable(parse):
    ctx = parse(SIMPLE)
    code = '#include <string.h>\nint a(void)\n{\n    return (int)strlen("g") + g;\n}'
    once = merge(ctx, [build_transformed(ctx, ctx.function('a'), code)]).text

    again = parse(once)
    twice = merge(again, [build_transformed(again, again.function('a'), code)]).text

    assert twice == once


def test_write_merged(parse, tmp_path):
    merged = merge(parse(SIMPLE), [])

    path = write_merged(merged, tmp_path / 'out' / 'simple.c')

    assert path.read_bytes() == SIMPLE.encode()


HEADERS = ['#include <stdio.h>', '#include <stdlib.h>', '#include "local.h"']
SEPARATORS = ['\n', '\n\n', '\n\n\n', '\n/* note */\n', '\n// note\n\n']


def random_unit(rng):
    functions = []
    parts = [h + '\n' for h in rng.sample(HEADERS, rng.randint(0, len(HEADERS)))]
    for i in range(rng.randint(0, 3)):
        parts.append(rng.choice([f'static int counter_{i} = {rng.randint(0, 99)};\n',
                                 f'#define LIMIT_{i} {rng.randint(0, 99)}\n',
                                 f'struct pair_{i} {{ int left; int right; }};\n']))
    for i in range(rng.randint(1, 6)):
        k = rng.randint(1, 9)
        body = rng.choice([
            f'int fn_{i}(int x)\n{{\n    int y = x * {k};\n    return y + {i};\n}}',
            f'int fn_{i}(int x) {{ return x + {k}; }}',
            f'int fn_{i}(int x)\n{{\n    if (x > {k}) {{\n        return x;\n    }}\n    return {k};\n}}',
        ])
        functions.append(body)
        parts.append(rng.choice(SEPARATORS) + body)
    parts.append(rng.choice(['', '\n', '\n\n']))
    return ''.join(parts)


def test_untouched_functions_survive_random_merges(parse):
    rng = random.Random(20240917)
    for case in range(250):
        text = random_unit(rng)
        ctx = parse(text)
        assert reconstruct(ctx) == text
        targets = [f for f in ctx.functions if rng.random() < 0.5]
        replacements = {}
        transformed = []
        for f in targets:
            replacement = f'int {f.name}(int x)\n{{\n    return x - {case};\n}}'
            prefix = rng.choice(['', '#include <string.h>\n', '#include <stdio.h>\n\n'])
            replacements[f.name] = replacement
            transformed.append(build_transformed(ctx, f, prefix + replacement))

        merged = merge(ctx, transformed)
        result = parse(merged.text)

        assert [f.name for f in result.functions] == [f.name for f in ctx.functions], text
        for before, after in zip(ctx.functions, result.functions):
            assert after.body_text == replacements.get(before.name, before.body_text), text
        assert merged.text.count('#include <stdio.h>') <= 1
        assert merged.text.count('#include <string.h>') <= 1
        assert result.globals == ctx.globals


NEW_HEADERS = ['#include <string.h>', '#include <stdio.h>', '#include <math.h>']


def test_each_prefix_step_only_touches_its_own_function(parse):
    rng = random.Random(4242)
    for case in range(80):
        ctx = parse(random_unit(rng))
        steps = []
        for f in ctx.functions:
            code, call = '', 'x'
            if rng.random() < 0.4:
                code += rng.choice(NEW_HEADERS) + '\n'
            if rng.random() < 0.4:
                code += f'static int {f.name}_part(int x)\n{{\n    return x + {case};\n}}\n\n'
                call = f'{f.name}_part(x)'
            code += f'int {f.name}(int x)\n{{\n    return {call} - {case};\n}}'
            steps.append(build_transformed(ctx, f, code))

        for t, step in enumerate(steps):
            before = parse(merge(ctx, steps[:t]).text)
            after = parse(merge(ctx, steps[:t + 1]).text)
            touched = {step.original.name, *step.helper_names}

            assert ({f.name: f.body_text for f in after.functions if f.name not in touched}
                    == {f.name: f.body_text for f in before.functions if f.name not in touched})
            assert after.function(step.original.name).body_text == step.replacement_text
            assert set(before.headers) <= set(after.headers)
            assert set(after.headers) - set(before.headers) <= set(step.new_headers)
            assert Counter(after.globals) - Counter(before.globals) == Counter(
                prototype for prototype, _ in step.helper_functions)
            assert not Counter(before.globals) - Counter(after.globals)
