import hashlib
import json
import os
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from codemorph.apps.gateway.serializers import generation_config
from codemorph.apps.gateway.transports import ReplayTransport
from codemorph.apps.variants.builds import run_build
from codemorph.apps.variants.exceptions import (
    AwaitingHuman, BuildToolMissing, ManifestError, NegativeDuration, WorkspaceDirty,
    WorkspaceLocked)
from codemorph.apps.variants.models import (
    Derivation, ManifestFile, ProjectManifest, VariantRecord, variant_id)
from codemorph.apps.variants.planning import load_contexts, plan, select_functions
from codemorph.apps.variants.serializers import VariantRecordSerializer, load_manifest
from codemorph.apps.variants.synthesis import record_man_hours, resume, run_strategies, synthesize
from codemorph.apps.variants.workspace import Workspace
from codemorph.cli import run

VARIANT_FIXTURES = Path(__file__).parent / 'fixtures'

OPS = ('int one(void)\n{\n    return 1;\n}\n\n'
       'int two(void)\n{\n    return 2;\n}\n\n'
       'int three(void)\n{\n    return 3;\n}\n')
TINY = 'int solo(int x)\n{\n    return x;\n}\n'

VARIANTS = {
    'solo': 'int solo(int x)\n{\n    return x + 0;\n}',
    'one': 'int one(void)\n{\n    return 0 + 1;\n}',
    'two': 'int two(void)\n{\n    return 0 + 2;\n}',
    'three': 'int three(void)\n{\n    return 0 + 3;\n}',
}
BROKEN_TWO = '```c\nint two(void)\n{\n    return BROKEN;\n}\n```'

BUILD_SCRIPT = '''import pathlib
import sys

sources = sorted(pathlib.Path('src').glob('*.c'))
if any('BROKEN' in path.read_text() for path in sources):
    sys.stderr.write('error: BROKEN undeclared\\n')
    sys.exit(1)
pathlib.Path('build').mkdir(exist_ok=True)
pathlib.Path('build', 'variant.txt').write_text(''.join(path.read_text() for path in sources))
print('build ok')
'''

needs_cc = pytest.mark.skipif(shutil.which('cc') is None, reason='no C compiler on PATH')


@pytest.fixture
def manifest_path(tmp_path):
    root = tmp_path / 'project'
    (root / 'src').mkdir(parents=True)
    (root / 'src' / 'ops.c').write_text(OPS)
    (root / 'src' / 'tiny.c').write_text(TINY)
    (root / 'build.py').write_text(BUILD_SCRIPT)
    path = root / 'manifest.json'
    path.write_text(json.dumps({
        'root': '.',
        'files': [{'path': 'src/ops.c'}, {'path': 'src/tiny.c', 'language': 'c'}],
        'build_command': [sys.executable, 'build.py'],
        'build_ok_pattern': '^build ok$',
        'variant_output_glob': 'build/variant.txt',
        'strategies': ['optimization', 'quality'],
    }))
    return path


@pytest.fixture
def manifest(manifest_path):
    return load_manifest(manifest_path)


@pytest.fixture
def transcripts(tmp_path, write_transcript):
    directory = tmp_path / 'transcripts'
    for strategy in ('optimization', 'quality'):
        for name, code in VARIANTS.items():
            write_transcript(directory, strategy, name, f'```c\n{code}\n```')
    return directory


@pytest.fixture
def workspace(tmp_path):
    return Workspace(tmp_path / 'ws')


def tree_digest(root):
    digest = hashlib.sha256()
    for path in sorted(Path(root).rglob('*')):
        if path.is_file():
            digest.update(str(path.relative_to(root)).encode())
            digest.update(path.read_bytes())
    return digest.hexdigest()


def run_optimization(manifest, workspace, transcripts, **kwargs):
    return synthesize(manifest, plan(manifest, load_contexts(manifest)), 'optimization',
                      generation_config(), workspace, transport=ReplayTransport(transcripts),
                      **kwargs)


@pytest.mark.parametrize('total, selected', [
    (0, 0), (1, 1), (4, 4), (9, 9), (10, 6), (15, 9), (20, 12), (21, 7), (35, 11), (40, 12),
    (41, 9), (61, 13), (70, 14), (71, 11), (93, 14),
])
def test_select_functions(total, selected):
    assert select_functions(total) == selected


def manifest_of(*paths, **kwargs):
    return ProjectManifest(root=Path('.'), files=tuple(ManifestFile(p, 'c') for p in paths),
                           build_command=('true',), variant_output_glob='a.out', **kwargs)


def unit(parse, count):
    return parse(''.join(f'int f{i}(void) {{ return {i}; }}\n' for i in range(count)))


def test_plan_orders_by_function_count(parse):
    modification_plan = plan(manifest_of('a.c', 'b.c', 'c.c'),
                             [unit(parse, 5), unit(parse, 2), unit(parse, 12)])

    assert [f.path for f in modification_plan.files] == ['b.c', 'a.c', 'c.c']
    assert [f.prefix_length for f in modification_plan.files] == [2, 5, 8]
    assert modification_plan.files[0].function_names == ('f0', 'f1')
    assert modification_plan.derivation == Derivation.ASCENDING_FUNCTION_COUNT


def test_plan_ties(parse):
    manifest = manifest_of('a.c', 'b.c', 'c.c')
    contexts = [unit(parse, 3), unit(parse, 3), unit(parse, 1)]

    assert [f.path for f in plan(manifest, contexts).files] == ['c.c', 'a.c', 'b.c']

    shuffled = plan(manifest, contexts, shuffle_ties=True, seed=7)
    assert shuffled == plan(manifest, contexts, shuffle_ties=True, seed=7)
    assert shuffled.files[0].path == 'c.c'
    assert {f.path for f in shuffled.files} == {'a.c', 'b.c', 'c.c'}


def test_plan_override_and_prefix(parse):
    manifest = manifest_of('a.c', 'b.c', selection_override={'a.c': 1, 'b.c': 99})
    contexts = [unit(parse, 4), unit(parse, 61)]

    modification_plan = plan(manifest, contexts)
    assert [f.prefix_length for f in modification_plan.files] == [1, 61]
    assert modification_plan.derivation == Derivation.MANUAL

    capped = plan(manifest_of('a.c', 'b.c'), contexts, prefix=2)
    assert [f.prefix_length for f in capped.files] == [2, 2]


def test_plan_skips_excluded_files(parse):
    manifest = manifest_of('gen/tables.c', 'a.c', exclude=('gen/*',))

    assert [f.path for f in manifest.eligible_files] == ['a.c']
    assert [f.path for f in plan(manifest, [unit(parse, 2)]).files] == ['a.c']


def test_toy_project_plan(toy_project):
    manifest = load_manifest(toy_project / 'manifest.json')

    modification_plan = plan(manifest, load_contexts(manifest))

    assert modification_plan.as_dict() == {
        'derivation': 'ascending_function_count',
        'files': [
            {'path': 'src/mathops.c', 'language': 'c', 'function_count': 2, 'modify': 2,
             'functions': ['add', 'scale']},
            {'path': 'src/main.c', 'language': 'c', 'function_count': 3, 'modify': 3,
             'functions': ['banner', 'checksum', 'main']},
        ],
    }


def write_manifest(tmp_path, **overrides):
    (tmp_path / 'a.c').write_text('int a(void) { return 0; }\n')
    data = {'root': '.', 'files': [{'path': 'a.c'}], 'build_command': ['make'],
            'variant_output_glob': 'a.out', **overrides}
    path = tmp_path / 'manifest.json'
    path.write_text(json.dumps(data))
    return path


def test_load_manifest(tmp_path):
    manifest = load_manifest(write_manifest(tmp_path, strategies=['Windows-API', 'quality']))

    assert manifest.root == tmp_path.resolve()
    assert manifest.files == (ManifestFile('a.c', 'c'),)
    assert manifest.strategies == ('windows_api', 'quality')
    assert manifest.build_ok_pattern is None


@pytest.mark.parametrize('overrides, field', [
    ({'build_ok_pattern': '(unclosed'}, 'build_ok_pattern'),
    ({'strategies': ['teleportation']}, 'strategies'),
    ({'files': [{'path': 'a.c'}, {'path': 'a.c'}]}, 'files'),
    ({'selection_override': {'b.c': 1}}, 'selection_override'),
    ({'files': [{'path': 'main.rs'}]}, 'files'),
    ({'build_command': []}, 'build_command'),
])
def test_invalid_manifests(tmp_path, overrides, field):
    with pytest.raises(ManifestError) as excinfo:
        load_manifest(write_manifest(tmp_path, **overrides))
    assert field in excinfo.value.details['errors']


def test_manifest_files_must_exist(tmp_path):
    with pytest.raises(ManifestError):
        load_manifest(write_manifest(tmp_path, files=[{'path': 'missing.c'}]))

    (tmp_path / 'broken.json').write_text('{')
    with pytest.raises(ManifestError):
        load_manifest(tmp_path / 'broken.json')


def test_synthesize_builds_every_prefix(manifest, workspace, transcripts):
    pristine = tree_digest(manifest.root)

    records = run_optimization(manifest, workspace, transcripts)

    assert [r.variant_id for r in records] == [
        'optimization/src/tiny.c/1', 'optimization/src/ops.c/1',
        'optimization/src/ops.c/2', 'optimization/src/ops.c/3']
    assert {r.compile_status for r in records} == {'ok'}
    assert {r.merge_status for r in records} == {'merged'}
    assert all(r.edit_lines == 0 and r.man_hours == 0 for r in records)
    assert tree_digest(manifest.root) == pristine

    second = (workspace.root / records[2].artifact_path).read_text()
    assert 'return 0 + 1;' in second
    assert 'return 0 + 2;' in second
    assert 'return 3;' in second
    assert (workspace.root / 'prompts' / 'src/ops.c' / 'optimization' / '3.txt').exists()
    assert (workspace.generation_path('optimization', 'src/ops.c', 3)).exists()
    assert [r.variant_id for r in workspace.records()] == [r.variant_id for r in records]
    assert workspace.accepted('optimization', 'src/ops.c') == 3


def test_accepted_steps_are_not_redone(manifest, workspace, transcripts):
    run_optimization(manifest, workspace, transcripts)

    assert run_optimization(manifest, workspace, transcripts) == []
    assert len(workspace.records()) == 4


def test_failed_build_halts_and_resume_continues(manifest, workspace, transcripts,
                                                 write_transcript):
    write_transcript(transcripts, 'optimization', 'two', BROKEN_TWO)

    with pytest.raises(AwaitingHuman) as excinfo:
        run_optimization(manifest, workspace, transcripts)

    assert excinfo.value.returncode == 3
    assert excinfo.value.details['build_stderr_path'] == 'builds/optimization/src/ops.c/2/stderr.log'
    assert len(workspace.records()) == 2
    checkpoint = workspace.read_checkpoint()
    assert (checkpoint.file, checkpoint.prefix_t, checkpoint.function) == ('src/ops.c', 2, 'two')
    assert checkpoint.region_names == ['two']
    assert 'BROKEN' in (workspace.root / checkpoint.build_stderr_path).read_text()

    with pytest.raises(WorkspaceDirty):
        run_optimization(manifest, workspace, transcripts)
    with pytest.raises(AwaitingHuman):
        resume(manifest, workspace)
    assert workspace.has_checkpoint()

    shadow_file = workspace.shadow_root('optimization') / 'src' / 'ops.c'
    shadow_file.write_text(shadow_file.read_text().replace('return BROKEN;', 'return 2;'))
    record, _ = resume(manifest, workspace, man_hours=0.15)

    assert record.variant_id == 'optimization/src/ops.c/2'
    assert record.compile_status == 'ok_after_human_fix'
    assert record.edit_lines == 2
    assert record.man_hours == 0.15
    assert record.checkpoint_at == checkpoint.created_at
    assert record.resumed_at is not None
    assert not workspace.has_checkpoint()

    rest = run_optimization(manifest, workspace, transcripts)
    assert [r.variant_id for r in rest] == ['optimization/src/ops.c/3']
    third = (workspace.root / rest[0].artifact_path).read_text()
    assert 'return 2;' in third
    assert 'return 0 + 3;' in third


def test_resume_needs_a_checkpoint(manifest, workspace):
    with pytest.raises(WorkspaceDirty):
        resume(manifest, workspace)


def test_checkpoint_remembers_pending_strategies(manifest, workspace, transcripts,
                                                 write_transcript):
    write_transcript(transcripts, 'optimization', 'two', BROKEN_TWO)

    with pytest.raises(AwaitingHuman):
        run_strategies(manifest, plan(manifest, load_contexts(manifest)),
                       ['optimization', 'quality'], generation_config(), workspace,
                       transport=ReplayTransport(transcripts))

    assert workspace.read_checkpoint().pending_strategies == ['quality']


def test_name_mismatch_keeps_the_original(manifest, workspace, transcripts, write_transcript):
    write_transcript(transcripts, 'optimization', 'one', '```c\nint uno(void)\n{\n    return 1;\n}\n```')

    records = run_optimization(manifest, workspace, transcripts)

    assert records[1].merge_status == 'name_mismatch_reverted'
    assert records[1].compile_status == 'ok'
    assert 'int one(void)\n{\n    return 1;\n}' in (
        workspace.shadow_root('optimization') / 'src' / 'ops.c').read_text()


def test_batched_generation(manifest, workspace, transcripts, write_transcript):
    code = '\n\n'.join(VARIANTS[name] for name in ('one', 'two', 'three'))
    write_transcript(transcripts, 'optimization', 'one+two+three', f'```c\n{code}\n```')

    records = run_optimization(manifest, workspace, transcripts, batch_size=3)

    assert len(records) == 4
    _, batch, lead = workspace.load_generation('optimization', 'src/ops.c', 2)
    assert (batch, lead) == (['one', 'two', 'three'], False)
    assert records[2].generation_seconds == 0
    assert (workspace.shadow_root('optimization') / 'src' / 'ops.c').read_text() == OPS.replace(
        'return 1;', 'return 0 + 1;').replace('return 2;', 'return 0 + 2;').replace(
        'return 3;', 'return 0 + 3;')


def test_record_man_hours():
    record = VariantRecord(variant_id=variant_id('quality', 'src/a.c', 1), strategy='quality',
                           file='src/a.c', prefix_t=1, function='a', generation={},
                           merge_status='merged', compile_status='ok_after_human_fix',
                           artifact_path='variants/quality/src/a.c/1/a.out')

    record_man_hours(record, '2024-05-01T09:00:00+00:00', '2024-05-01T09:18:00+00:00')
    assert record.man_hours == pytest.approx(0.3)

    record_man_hours(record, '2024-05-01T09:00:00+00:00', '2024-05-01T09:18:00+00:00',
                     override=0.15)
    assert record.man_hours == 0.15

    with pytest.raises(NegativeDuration):
        record_man_hours(record, '2024-05-01T09:18:00+00:00', '2024-05-01T09:00:00+00:00')
    with pytest.raises(NegativeDuration):
        record_man_hours(record, '2024-05-01T09:00:00+00:00', '2024-05-01T09:18:00+00:00',
                         override=-1)


def test_record_serializer_ties_artifacts_to_compiling():
    data = {'variant_id': 'quality/a.c/1', 'strategy': 'quality', 'file': 'a.c', 'prefix_t': 1,
            'function': 'a', 'generation': {}, 'merge_status': 'merged',
            'compile_status': 'ok', 'artifact_path': None, 'edit_lines': 0, 'man_hours': 0,
            'created_at': '2024-05-01T09:00:00+00:00', 'modified_at': '2024-05-01T09:00:00+00:00'}

    assert not VariantRecordSerializer(data=data).is_valid()
    assert VariantRecordSerializer(data={**data, 'artifact_path': 'variants/x'}).is_valid()
    assert VariantRecordSerializer(
        data={**data, 'compile_status': 'failed_awaiting_human'}).is_valid()


def test_workspace_lock(workspace):
    with workspace.lock():
        with pytest.raises(WorkspaceLocked):
            with workspace.lock():
                pass
    assert not workspace.lock_path.exists()


@pytest.mark.parametrize('content', ['4194303', 'not a pid', ''])
def test_stale_lock_is_cleared(workspace, monkeypatch, content):
    monkeypatch.setattr('psutil.pid_exists', lambda pid: False)
    workspace.root.mkdir(parents=True, exist_ok=True)
    workspace.lock_path.write_text(content)

    with workspace.lock():
        assert workspace.lock_owner() == os.getpid()
    assert not workspace.lock_path.exists()


def test_live_lock_is_kept(workspace):
    workspace.root.mkdir(parents=True, exist_ok=True)
    workspace.lock_path.write_text(str(os.getppid()))

    with pytest.raises(WorkspaceLocked):
        with workspace.lock():
            pass
    assert workspace.lock_path.read_text() == str(os.getppid())


def test_plan_is_persisted(manifest, workspace):
    modification_plan = plan(manifest, load_contexts(manifest))

    workspace.save_plan(modification_plan)

    assert workspace.load_plan() == modification_plan


def test_shadow_skips_a_nested_workspace(manifest):
    workspace = Workspace(manifest.root / '.codemorph')
    workspace.root.mkdir()

    shadow = workspace.ensure_shadow('quality', manifest.root)

    assert (shadow / 'src' / 'ops.c').read_text() == OPS
    assert not (shadow / '.codemorph').exists()


def test_build_outcomes(tmp_path):
    def build(*command, pattern=None, timeout=None):
        custom = ProjectManifest(root=tmp_path, files=(), build_command=command,
                                 variant_output_glob='out/*.bin', build_ok_pattern=pattern)
        return run_build(custom, tmp_path, tmp_path / 'logs', timeout=timeout)

    with pytest.raises(BuildToolMissing):
        build('no-such-build-tool-on-this-machine')

    outcome = build(sys.executable, '-c', 'print("done")')
    assert not outcome.ok
    assert outcome.reason.startswith('nothing matches')
    assert outcome.stdout_path.read_text().strip() == 'done'

    (tmp_path / 'out').mkdir()
    (tmp_path / 'out' / 'v.bin').write_bytes(b'\0')
    assert build(sys.executable, '-c', 'print("done")').ok
    assert not build(sys.executable, '-c', 'print("done")', pattern='^linked$').ok
    assert not build(sys.executable, '-c', 'import sys; sys.exit(2)').ok

    slow = build(sys.executable, '-c', 'import time; time.sleep(10)', timeout=0.5)
    assert not slow.ok
    assert slow.returncode == -1
    assert 'timed out' in slow.stderr_path.read_text()


def last_json_line(text):
    return json.loads([line for line in text.splitlines() if line.strip()][-1])


def test_cli_plan(manifest_path, capsys):
    assert run(['plan', '--manifest', str(manifest_path)]) == 0

    output = json.loads(capsys.readouterr().out)
    assert [(f['path'], f['modify']) for f in output['files']] == [('src/tiny.c', 1),
                                                                   ('src/ops.c', 3)]


def test_cli_usage_errors(manifest_path, capsys):
    assert run(['plan', '--manifest', str(manifest_path), '--bogus']) == 2
    assert run(['plan']) == 2
    assert run(['transmogrify']) == 2
    assert last_json_line(capsys.readouterr().err)['message'] == "unknown command 'transmogrify'"
    assert run([]) == 2
    assert run(['--help']) == 0
    assert run(['--version']) == 0
    assert capsys.readouterr().out.strip().endswith('codemorph 0.3.0')


def test_cli_domain_error(tmp_path, capsys):
    assert run(['plan', '--manifest', str(tmp_path / 'missing.json')]) == 1

    diagnostic = last_json_line(capsys.readouterr().err)
    assert (diagnostic['level'], diagnostic['error']) == ('error', 'ManifestError')


def test_cli_manifest_not_utf8(tmp_path, capsys):
    path = tmp_path / 'manifest.json'
    path.write_bytes(b'{"root": "\xff"}')

    assert run(['plan', '--manifest', str(path)]) == 1

    assert last_json_line(capsys.readouterr().err)['error'] == 'ManifestError'


@pytest.mark.parametrize('content', [
    b'{"digest": "x", "targets": ["one"]}',
    b'{"responses": "```c\\nint one(void) { return 1; }\\n```"}',
    b'["\xe9"]',
])
def test_cli_unusable_transcript(manifest_path, transcripts, tmp_path, capsys, content):
    (transcripts / 'optimization' / 'one.json').write_bytes(content)
    ws = tmp_path / 'ws'

    assert run(['mutate', '--manifest', str(manifest_path), '--workspace', str(ws),
                '--replay', str(transcripts), '--strategy', 'optimization']) == 1

    diagnostic = last_json_line(capsys.readouterr().err)
    assert (diagnostic['error'], diagnostic['code']) == ('TransportError', 'transport_error')
    assert not (ws / '.lock').exists()


def test_cli_unexpected_error(manifest_path, capsys, monkeypatch):
    def explode(*args, **kwargs):
        raise RuntimeError('boom')
    monkeypatch.setattr('codemorph.apps.variants.management.commands.plan.plan', explode)

    assert run(['plan', '--manifest', str(manifest_path)]) == 1

    diagnostic = last_json_line(capsys.readouterr().err)
    assert (diagnostic['level'], diagnostic['error'], diagnostic['message']) == (
        'error', 'RuntimeError', 'boom')


def test_cli_mutate_resume_report(manifest_path, transcripts, tmp_path, capsys,
                                  write_transcript):
    write_transcript(transcripts, 'optimization', 'two', BROKEN_TWO)
    ws = tmp_path / 'ws'
    common = ['--manifest', str(manifest_path), '--workspace', str(ws),
              '--replay', str(transcripts)]

    assert run(['mutate', *common, '--strategy', 'optimization']) == 3
    diagnostic = last_json_line(capsys.readouterr().err)
    assert (diagnostic['level'], diagnostic['error']) == ('warning', 'AwaitingHuman')
    assert diagnostic['prefix_t'] == 2
    assert (ws / 'CHECKPOINT.json').exists()
    assert not (ws / '.lock').exists()

    shadow_file = ws / 'shadow' / 'optimization' / 'src' / 'ops.c'
    shadow_file.write_text(shadow_file.read_text().replace('return BROKEN;', 'return 2;'))
    assert run(['resume', *common, '--man-hours', '0.25']) == 0
    resumed = json.loads(capsys.readouterr().out)['records']
    assert [(r['variant_id'], r['compile_status']) for r in resumed] == [
        ('optimization/src/ops.c/2', 'ok_after_human_fix'),
        ('optimization/src/ops.c/3', 'ok')]

    assert run(['report', '--workspace', str(ws)]) == 0
    summary = json.loads(capsys.readouterr().out)['optimization']
    assert (summary['variants'], summary['W'], summary['H']) == (4, 2, 0.25)
    assert summary['human_fixes'] == 1
    assert summary['mean_rate'] is None


def copy_transcripts(tmp_path):
    directory = tmp_path / 'transcripts'
    shutil.copytree(VARIANT_FIXTURES / 'transcripts', directory)
    return directory


def passes_check(toy_project, artifact):
    return subprocess.run(['sh', str(toy_project / 'check.sh'), str(artifact)]).returncode == 0


@needs_cc
def test_toy_project_variants_still_work(toy_project, tmp_path):
    manifest = load_manifest(toy_project / 'manifest.json')
    workspace = Workspace(tmp_path / 'ws')

    records = run_strategies(manifest, plan(manifest, load_contexts(manifest)),
                             manifest.strategies, generation_config(), workspace,
                             transport=ReplayTransport(copy_transcripts(tmp_path)))

    assert len(records) == 10
    assert {r.compile_status for r in records} == {'ok'}
    for record in records:
        assert passes_check(toy_project, workspace.root / record.artifact_path)


@needs_cc
def test_toy_project_human_fix(toy_project, tmp_path):
    manifest = load_manifest(toy_project / 'manifest.json')
    workspace = Workspace(tmp_path / 'ws')
    transcripts = copy_transcripts(tmp_path)
    shutil.copy(VARIANT_FIXTURES / 'transcripts_broken' / 'optimization' / 'add.json',
                transcripts / 'optimization' / 'add.json')
    modification_plan = plan(manifest, load_contexts(manifest))
    transport = ReplayTransport(transcripts)

    with pytest.raises(AwaitingHuman):
        synthesize(manifest, modification_plan, 'optimization', generation_config(), workspace,
                   transport=transport)
    assert workspace.read_checkpoint().file == 'src/mathops.c'

    shadow_file = workspace.shadow_root('optimization') / 'src' / 'mathops.c'
    shadow_file.write_text(shadow_file.read_text().replace('return a + c;', 'return a + b;'))
    record, _ = resume(manifest, workspace, man_hours=0.15)
    rest = synthesize(manifest, modification_plan, 'optimization', generation_config(),
                      workspace, transport=transport)

    assert record.edit_lines == 2
    assert len(rest) == 4
    for variant in [record] + rest:
        assert passes_check(toy_project, workspace.root / variant.artifact_path)
