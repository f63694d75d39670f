import csv
import io
import itertools
import json
import logging
import random
from dataclasses import asdict

import pytest
from django.core.management import CommandError, call_command

from codemorph.apps.base.serializers import RecordFileError, append_jsonl
from codemorph.apps.metrics.exceptions import (
    EmptyBaselineTrace, EmptyVariantSet, MetricsInputError, ZeroDetectors)
from codemorph.apps.metrics.formulas import (
    asr, detector_rate, edit_workload, lcs_length, line_edit_count, man_hours_total,
    normalized_lcs, preservation_rate)
from codemorph.apps.metrics.loaders import load_reports, load_trace, load_traces, load_verdicts
from codemorph.apps.metrics.models import (
    UNDEFINED, CallTrace, DetectorReport, PreservationConfig, Verdict)
from codemorph.apps.metrics.reports import evaluate_variants, summarize, table
from codemorph.apps.variants.models import VariantRecord
from codemorph.cli import run


def reports(variant, *runs):
    return [DetectorReport(variant, index, total, flagged)
            for index, (flagged, total) in enumerate(runs, 1)]


def trace(*calls):
    return CallTrace.from_calls('t', calls)


def record(variant, strategy='optimization', edit_lines=0, man_hours=0.0, compiled=True,
           **kwargs):
    return VariantRecord(
        variant_id=variant, strategy=strategy, file='a.c', prefix_t=int(variant.rsplit('/', 1)[1]),
        function='f', generation={'outcome': 'ok', 'generated_line_count': 4},
        merge_status='merged',
        compile_status='ok' if compiled else 'failed_awaiting_human',
        artifact_path=f'variants/{variant}/a.out' if compiled else None,
        edit_lines=edit_lines, man_hours=man_hours, **kwargs)


def test_detector_rate():
    assert detector_rate(reports('v', (3, 4))) == 75.0
    assert detector_rate(reports('v', (1, 4), (2, 4), (3, 4))) == 50.0
    assert detector_rate(reports('v', (0, 7))) == 0.0
    # runs may see different numbers of detectors
    assert detector_rate(reports('v', (1, 2), (1, 4))) == 37.5


def test_detector_rate_errors():
    with pytest.raises(ZeroDetectors) as excinfo:
        detector_rate(reports('v', (1, 4), (0, 0)))
    assert excinfo.value.details == {'variant_id': 'v', 'run_index': 2}
    with pytest.raises(MetricsInputError):
        detector_rate([])
    with pytest.raises(MetricsInputError):
        detector_rate(reports('v', (5, 4)))


def test_asr():
    variants = [f'v{i}' for i in range(14)]
    verdicts = {v: Verdict.BENIGN if i < 10 else Verdict.MALICIOUS for i, v in enumerate(variants)}

    assert round(asr(variants, verdicts), 3) == 71.429
    assert asr(['a', 'b'], {'a': 'malicious', 'b': 'malicious'}) == 0.0
    assert asr(['a', 'b'], {'a': 'benign', 'b': 'benign'}) == 100.0
    with pytest.raises(EmptyVariantSet):
        asr([], verdicts)
    with pytest.raises(MetricsInputError):
        asr(['a', 'missing'], {'a': 'benign'})


def test_edit_workload_and_man_hours():
    assert edit_workload([record('s/a.c/1'), record('s/a.c/2')]) == 0
    assert edit_workload([record('s/a.c/1', edit_lines=3), record('s/a.c/2'),
                          record('s/b.c/1', edit_lines=5)]) == 8
    assert man_hours_total([record('s/a.c/1', man_hours=0.1),
                            record('s/a.c/2', man_hours=0.2)]) == pytest.approx(0.3)
    assert man_hours_total([]) == 0
    assert man_hours_total([record('s/a.c/1', man_hours=0.3)]) == 0.3


def test_workload_adds_over_disjoint_records():
    rng = random.Random(31)
    for _ in range(100):
        records = [record(f's/a.c/{t}', edit_lines=rng.randint(0, 40),
                          man_hours=rng.choice([0.0, 0.05, 0.1, 0.25, 1.5]))
                   for t in range(1, rng.randint(1, 15) + 1)]
        cut = rng.randint(0, len(records))
        rng.shuffle(records)
        left, right = records[:cut], records[cut:]

        assert edit_workload(records) == edit_workload(left) + edit_workload(right)
        assert man_hours_total(records) == pytest.approx(
            man_hours_total(left) + man_hours_total(right))


def test_line_edit_count():
    original = 'int f(void)\n{\n    return a + c;\n}'

    assert line_edit_count(original, original) == 0
    assert line_edit_count(original, original.replace('a + c', 'a + b')) == 2
    assert line_edit_count(original, original.replace('    return', '\treturn')) == 2
    assert line_edit_count(original, original.replace('{\n', '{\n    int b = 0;\n')) == 1
    assert line_edit_count('', original) == 4


def test_lcs_examples():
    assert lcs_length(trace('x', 'y', 'z'), trace('x', 'y', 'z')) == 3
    assert lcs_length(trace('x', 'y', 'z'), CallTrace('t', ())) == 0
    assert lcs_length(trace('a', 'b', 'c', 'd'), trace('b', 'd', 'a')) == 2


def brute_force_lcs(a, b):
    def is_subsequence(candidate, sequence):
        remaining = iter(sequence)
        return all(call in remaining for call in candidate)

    for size in range(min(len(a), len(b)), 0, -1):
        if any(is_subsequence(c, b) for c in itertools.combinations(a, size)):
            return size
    return 0


def test_lcs_matches_brute_force():
    calls = ['open', 'read', 'write', 'close']
    short = [seq for size in range(5) for seq in itertools.product(calls[:3], repeat=size)]
    for a, b in itertools.product(short, repeat=2):
        assert lcs_length(a, b) == brute_force_lcs(a, b)

    rng = random.Random(1337)
    for _ in range(300):
        a = [rng.choice(calls) for _ in range(rng.randint(0, 12))]
        b = [rng.choice(calls) for _ in range(rng.randint(0, 12))]
        expected = brute_force_lcs(a, b)
        assert lcs_length(a, b) == expected
        assert lcs_length(b, a) == expected
        assert expected <= min(len(a), len(b))


def test_normalized_lcs():
    m = trace('open', 'read', 'close', 'exit')

    assert normalized_lcs(m, m) == 1.0
    assert normalized_lcs(m, trace('open', 'sleep', 'read', 'close', 'getpid', 'exit')) == 1.0
    assert normalized_lcs(m, trace('read', 'write', 'exit')) == 0.5
    assert normalized_lcs(m, CallTrace('v', ())) == 0.0
    with pytest.raises(EmptyBaselineTrace):
        normalized_lcs(CallTrace('m', ()), m)


def test_normalized_lcs_under_insertions_and_deletions():
    rng = random.Random(2718)
    calls = ['open', 'read', 'write', 'close', 'mmap', 'exit']
    baseline = [rng.choice(calls) for _ in range(8)]
    variant = list(baseline)
    score = normalized_lcs(baseline, variant)
    assert score == 1.0

    for _ in range(1000):
        if variant and rng.random() < 0.5:
            del variant[rng.randrange(len(variant))]
            changed = normalized_lcs(baseline, variant)
            assert changed <= score
        else:
            variant.insert(rng.randint(0, len(variant)), rng.choice(calls))
            changed = normalized_lcs(baseline, variant)
            assert changed >= score
        assert 0.0 <= changed <= 1.0
        score = changed


def test_preservation_rate():
    variants = [(10.0, 1.0), (20.0, 0.97), (30.0, 0.96), (40.0, 0.5), (70.0, 1.0)]

    assert preservation_rate(50.0, variants) == 75.0
    assert preservation_rate(50.0, variants, PreservationConfig(delta=0.4)) == 100.0
    assert preservation_rate(5.0, variants) is UNDEFINED
    # equal to the baseline is not an evasion
    assert preservation_rate(10.0, [(10.0, 1.0)]) is UNDEFINED


def test_preservation_rate_ignores_variant_order():
    rng = random.Random(99)
    for _ in range(200):
        variants = [(rng.uniform(0, 100), rng.choice([0.5, 0.9, 0.96, 0.99, 1.0]))
                    for _ in range(rng.randint(0, 12))]
        baseline_rate = rng.uniform(0, 100)
        expected = preservation_rate(baseline_rate, variants)
        for _ in range(5):
            rng.shuffle(variants)
            assert preservation_rate(baseline_rate, variants) == expected


def test_preservation_config(settings):
    assert PreservationConfig().delta == 0.96
    settings.CODEMORPH_PRESERVATION_DELTA = 0.9
    assert PreservationConfig().delta == 0.9
    assert PreservationConfig(delta=1).delta == 1
    for delta in (0, -0.1, 1.5):
        with pytest.raises(MetricsInputError):
            PreservationConfig(delta=delta)


def test_undefined():
    assert str(UNDEFINED) == 'undefined'
    assert not UNDEFINED


def test_call_traces():
    assert trace(' open ', 'read').calls == ('open', 'read')
    assert len(trace('open', 'read')) == 2
    with pytest.raises(MetricsInputError):
        trace('open', '  ')


def test_load_trace(tmp_path):
    jsonl = tmp_path / 'v.jsonl'
    jsonl.write_text('{"seq": 2, "call": "ReadFile"}\n\n{"seq": 1, "call": "CreateFileW"}\n')
    text = tmp_path / 'baseline.txt'
    text.write_text('CreateFileW\nReadFile\n\nCloseHandle\n')

    assert load_trace(jsonl).calls == ('CreateFileW', 'ReadFile')
    assert load_trace(jsonl).program_id == 'v'
    assert load_trace(text, 'baseline').calls == ('CreateFileW', 'ReadFile', 'CloseHandle')
    with pytest.raises(MetricsInputError):
        load_trace(tmp_path / 'missing.txt')

    bad = tmp_path / 'bad.jsonl'
    bad.write_text('{"seq": 1}\n')
    with pytest.raises(RecordFileError):
        load_trace(bad)


def test_load_traces(tmp_path):
    nested = tmp_path / 'optimization' / 'src' / 'main.c'
    nested.mkdir(parents=True)
    (nested / '2.jsonl').write_text('{"seq": 1, "call": "open"}\n')
    (tmp_path / 'quality.txt').write_text('open\nclose\n')
    (tmp_path / 'notes.md').write_text('ignored')

    traces = load_traces(tmp_path)

    assert sorted(traces) == ['optimization/src/main.c/2', 'quality']
    assert traces['quality'].calls == ('open', 'close')
    with pytest.raises(MetricsInputError):
        load_traces(tmp_path / 'nowhere')


def test_load_reports(tmp_path):
    path = tmp_path / 'reports.jsonl'
    for row in [('v', 2, 10, 4), ('v', 1, 10, 2), ('baseline', 1, 10, 6)]:
        append_jsonl(path, dict(zip(('variant_id', 'run_index', 'detectors_total',
                                     'detectors_flagged'), row)))

    loaded = load_reports(path)

    assert [r.run_index for r in loaded['v']] == [1, 2]
    assert detector_rate(loaded['v']) == 30.0

    append_jsonl(path, {'variant_id': 'w', 'run_index': 1, 'detectors_total': 3,
                        'detectors_flagged': 4})
    with pytest.raises(RecordFileError):
        load_reports(path)


def test_load_verdicts(tmp_path):
    mapping = tmp_path / 'verdicts.json'
    mapping.write_text(json.dumps({'a': 'Benign ', 'b': 'MALICIOUS'}))
    lines = tmp_path / 'verdicts.jsonl'
    lines.write_text('{"variant_id": "a", "verdict": "benign"}\n'
                     '{"variant_id": "b", "verdict": "malicious"}\n')
    single = tmp_path / 'single.jsonl'
    single.write_text('{"variant_id": "a", "verdict": "benign"}\n')

    expected = {'a': Verdict.BENIGN, 'b': Verdict.MALICIOUS}
    assert load_verdicts(mapping) == expected
    assert load_verdicts(lines) == expected
    assert load_verdicts(single) == {'a': Verdict.BENIGN}

    mapping.write_text(json.dumps({'a': 'suspicious'}))
    with pytest.raises(MetricsInputError):
        load_verdicts(mapping)


@pytest.fixture
def study():
    """ two strategies scored against a baseline at 60 percent """
    return {
        'records': [
            record('optimization/a.c/1'),
            record('optimization/a.c/2', edit_lines=2, man_hours=0.3,
                   generation_seconds=1.5),
            record('quality/a.c/1', strategy='quality', generation_seconds=2.0),
        ],
        'reports': {
            'baseline': reports('baseline', (6, 10)),
            'optimization/a.c/1': reports('optimization/a.c/1', (3, 10), (4, 10), (5, 10)),
            'optimization/a.c/2': reports('optimization/a.c/2', (7, 10)),
            'quality/a.c/1': reports('quality/a.c/1', (1, 10)),
        },
        'verdicts': {'optimization/a.c/1': Verdict.BENIGN,
                     'optimization/a.c/2': Verdict.MALICIOUS,
                     'quality/a.c/1': Verdict.BENIGN},
        'traces': {'optimization/a.c/1': trace('open', 'sleep', 'read', 'close', 'exit'),
                   'quality/a.c/1': trace('open', 'exit')},
        'baseline_trace': trace('open', 'read', 'close', 'exit'),
    }


def test_summarize(study):
    summary = summarize(**study)

    assert list(summary) == ['optimization', 'quality']
    optimization, quality = summary['optimization'], summary['quality']
    assert (optimization['variants'], optimization['W'], optimization['H']) == (2, 2, 0.3)
    assert optimization['mean_rate'] == 55.0
    assert optimization['baseline_rate'] == 60.0
    assert optimization['reduction'] == 5.0
    assert optimization['below_baseline'] == 1
    assert optimization['asr'] == 50.0
    assert optimization['phi'] == 100.0
    assert optimization['generated_lines'] == 8
    assert optimization['generation_seconds'] == 1.5
    assert quality['phi'] == 0.0
    assert quality['asr'] == 100.0


def test_summarize_without_inputs(study):
    summary = summarize(study['records'], baseline_rate=5.0,
                        reports=study['reports'], traces=study['traces'],
                        baseline_trace=study['baseline_trace'])

    assert summary['optimization']['phi'] == 'undefined'
    assert summary['optimization']['asr'] is None
    assert summarize(study['records'])['quality']['mean_rate'] is None


def test_summarize_skips_uncompiled_variants():
    summary = summarize([record('optimization/a.c/1'),
                         record('optimization/a.c/2', compiled=False)])

    assert summary['optimization']['variants'] == 1


def test_evaluate_variants(study):
    rows = evaluate_variants(study['reports'], study['verdicts'], study['traces'],
                             study['baseline_trace'])

    assert [row['variant_id'] for row in rows] == [
        'optimization/a.c/1', 'optimization/a.c/2', 'quality/a.c/1']
    assert rows[0]['detector_rate'] == 40.0
    assert rows[0]['runs'] == 3
    assert rows[0]['normalized_lcs'] == 1.0
    assert rows[0]['verdict'] == 'benign'
    assert [row['below_baseline'] for row in rows] == [True, False, True]
    assert rows[1]['normalized_lcs'] is None


def test_unexpected_run_counts_are_logged(study, settings, caplog):
    caplog.set_level(logging.WARNING, logger='codemorph.apps.metrics')

    evaluate_variants(study['reports'])
    assert [r.getMessage() for r in caplog.records] == [
        'optimization/a.c/2: 1 scan run(s), expected 3',
        'quality/a.c/1: 1 scan run(s), expected 3']

    caplog.clear()
    settings.CODEMORPH_RUNS_PER_VARIANT = 1
    evaluate_variants(study['reports'])
    assert [r.getMessage() for r in caplog.records] == [
        'optimization/a.c/1: 3 scan run(s), expected 1']
    caplog.clear()
    evaluate_variants(study['reports'], runs_per_variant=3)
    assert len(caplog.records) == 2


def test_table():
    text = table([{'a': 1.0, 'b': None}, {'a': 'long value', 'b': 2}], ('a', 'b'))

    assert text.splitlines() == [
        'a           b',
        '----------  -',
        '1.000       -',
        'long value  2',
    ]


@pytest.fixture
def study_files(tmp_path, study):
    records = tmp_path / 'records.jsonl'
    for row in study['records']:
        append_jsonl(records, row.as_dict())
    reports_path = tmp_path / 'reports.jsonl'
    for runs in study['reports'].values():
        for report in runs:
            append_jsonl(reports_path, asdict(report))
    verdicts = tmp_path / 'verdicts.json'
    verdicts.write_text(json.dumps({k: v.value for k, v in study['verdicts'].items()}))
    traces = tmp_path / 'traces'
    for variant, variant_trace in study['traces'].items():
        path = traces / f'{variant}.txt'
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text('\n'.join(variant_trace.calls) + '\n')
    baseline = tmp_path / 'baseline.txt'
    baseline.write_text('\n'.join(study['baseline_trace'].calls) + '\n')
    return {'records': str(records), 'reports': str(reports_path), 'verdicts': str(verdicts),
            'traces': str(traces), 'baseline_trace': str(baseline)}


def test_report_command(study_files, tmp_path):
    out = io.StringIO()
    summary_csv = tmp_path / 'summary.csv'

    call_command('report', stdout=out, csv=str(summary_csv), **study_files)

    summary = json.loads(out.getvalue())
    assert summary['optimization']['phi'] == 100.0
    assert summary['quality']['mean_rate'] == 10.0
    with open(summary_csv, newline='') as handle:
        rows = list(csv.DictReader(handle))
    assert [row['strategy'] for row in rows] == ['optimization', 'quality']
    assert rows[0]['W'] == '2'


def test_report_delta(study_files):
    out = io.StringIO()

    call_command('report', stdout=out, delta=0.2, **study_files)

    assert json.loads(out.getvalue())['quality']['phi'] == 100.0


def test_evaluate_command(study_files):
    out = io.StringIO()
    inputs = {k: v for k, v in study_files.items() if k != 'records'}

    call_command('evaluate', stdout=out, **inputs)

    rows = [json.loads(line) for line in out.getvalue().splitlines()]
    assert [row['variant_id'] for row in rows] == [
        'optimization/a.c/1', 'optimization/a.c/2', 'quality/a.c/1']
    assert rows[2]['normalized_lcs'] == 0.5


def test_traces_need_a_baseline(study_files):
    inputs = {k: v for k, v in study_files.items() if k not in ('records', 'baseline_trace')}

    with pytest.raises(CommandError):
        call_command('evaluate', stdout=io.StringIO(), **inputs)


def test_undecodable_inputs(tmp_path):
    trace_path = tmp_path / 'base.txt'
    trace_path.write_bytes(b'open\nr\xe9ad\n')
    verdicts_path = tmp_path / 'verdicts.json'
    verdicts_path.write_bytes(b'{"a/1": "benign\xe9"}')

    with pytest.raises(MetricsInputError):
        load_trace(trace_path)
    with pytest.raises(MetricsInputError):
        load_verdicts(verdicts_path)


def test_cli_evaluate_with_undecodable_trace(study_files, tmp_path, capsys):
    baseline = tmp_path / 'baseline.txt'
    baseline.write_bytes(b'open\nr\xe9ad\n')

    assert run(['evaluate', '--reports', study_files['reports'], '--traces',
                study_files['traces'], '--baseline-trace', str(baseline)]) == 1

    err = [line for line in capsys.readouterr().err.splitlines() if line.strip()]
    diagnostic = json.loads(err[-1])
    assert (diagnostic['error'], diagnostic['path']) == ('MetricsInputError', str(baseline))
