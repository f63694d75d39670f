"""
Per-variant evaluation rows and the per-strategy summary built from workspace
records plus user-supplied detector reports, verdicts and call traces.
"""
import csv
import logging
import math
import statistics
from collections import OrderedDict

from django.conf import settings

from codemorph.apps.metrics.exceptions import MetricsInputError
from codemorph.apps.metrics.formulas import (
    asr, detector_rate, edit_workload, man_hours_total, normalized_lcs, preservation_rate)
from codemorph.apps.metrics.models import BASELINE_ID, UNDEFINED

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = (
    'strategy', 'variants', 'W', 'H', 'mean_rate', 'baseline_rate', 'reduction',
    'below_baseline', 'asr', 'phi', 'generated_lines', 'generation_seconds',
    'reverted_generations', 'human_fixes',
)
ROW_COLUMNS = ('variant_id', 'runs', 'detector_rate', 'normalized_lcs', 'verdict',
               'below_baseline')


def baseline_rate_of(reports, baseline_rate=None):
    """ explicit rate first, then the reports filed under the baseline id """
    if baseline_rate is not None:
        return baseline_rate
    if BASELINE_ID in reports:
        return detector_rate(reports[BASELINE_ID])
    return None


def evaluate_variants(reports, verdicts=None, traces=None, baseline_trace=None,
                      baseline_rate=None, runs_per_variant=None):
    """
    One row per variant that has detector reports.

    :param reports: variant id -> DetectorReports
    :param verdicts: variant id -> Verdict
    :param traces: variant id -> CallTrace
    :param baseline_trace: CallTrace of the unmodified program
    :param baseline_rate: detector rate of the unmodified program
    :param runs_per_variant: expected scan runs k; other counts are logged
    """
    verdicts, traces = verdicts or {}, traces or {}
    runs_per_variant = runs_per_variant or settings.CODEMORPH_RUNS_PER_VARIANT
    baseline_rate = baseline_rate_of(reports, baseline_rate)
    rows = []
    for variant, variant_reports in sorted(reports.items()):
        if variant == BASELINE_ID:
            continue
        if len(variant_reports) != runs_per_variant:
            logger.warning(f'{variant}: {len(variant_reports)} scan run(s), '
                           f'expected {runs_per_variant}')
        rate = detector_rate(variant_reports)
        nlcs = None
        if baseline_trace is not None and variant in traces:
            nlcs = normalized_lcs(baseline_trace, traces[variant])
        verdict = verdicts.get(variant)
        rows.append(OrderedDict([
            ('variant_id', variant),
            ('runs', len(variant_reports)),
            ('detector_rate', rate),
            ('normalized_lcs', nlcs),
            ('verdict', verdict.value if verdict is not None else None),
            ('below_baseline', None if baseline_rate is None else rate < baseline_rate),
        ]))
    return rows


def summarize(records, reports=None, verdicts=None, traces=None, baseline_trace=None,
              baseline_rate=None, cfg=None):
    """
    Summary per strategy: edit workload W, man-hours H, mean detector rate,
    attack success rate, preservation rate and generation statistics.

    Figures that need inputs which were not supplied are None.

    :param records: VariantRecords
    :return: OrderedDict strategy -> summary dict
    """
    reports, verdicts, traces = reports or {}, verdicts or {}, traces or {}
    baseline_rate = baseline_rate_of(reports, baseline_rate)
    by_strategy = OrderedDict()
    for record in records:
        by_strategy.setdefault(record.strategy, []).append(record)

    summary = OrderedDict()
    for strategy, strategy_records in by_strategy.items():
        variant_ids = [r.variant_id for r in strategy_records if r.artifact_path]
        rates = {v: detector_rate(reports[v]) for v in variant_ids if v in reports}
        mean_rate = statistics.fmean(rates.values()) if rates else None

        judged = [v for v in variant_ids if v in verdicts]
        phi = None
        if baseline_rate is not None and baseline_trace is not None:
            pairs = [(rates[v], normalized_lcs(baseline_trace, traces[v]))
                     for v in rates if v in traces]
            phi = preservation_rate(baseline_rate, pairs, cfg)

        summary[strategy] = OrderedDict([
            ('variants', len(variant_ids)),
            ('W', edit_workload(strategy_records)),
            ('H', man_hours_total(strategy_records)),
            ('mean_rate', mean_rate),
            ('baseline_rate', baseline_rate),
            ('reduction', None if mean_rate is None or baseline_rate is None
             else baseline_rate - mean_rate),
            ('below_baseline', None if baseline_rate is None
             else sum(1 for rate in rates.values() if rate < baseline_rate)),
            ('asr', asr(judged, verdicts) if judged else None),
            ('phi', str(UNDEFINED) if phi is UNDEFINED else phi),
            ('generated_lines', sum(r.generation.get('generated_line_count', 0)
                                    for r in strategy_records)),
            ('generation_seconds', math.fsum(r.generation_seconds for r in strategy_records)),
            ('reverted_generations', sum(1 for r in strategy_records
                                         if r.generation.get('outcome') == 'reverted')),
            ('human_fixes', sum(1 for r in strategy_records
                                if r.compile_status == 'ok_after_human_fix')),
        ])
    return summary


def write_summary_csv(summary, path):
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle)
        writer.writerow(SUMMARY_COLUMNS)
        for strategy, values in summary.items():
            writer.writerow([strategy] + ['' if values[c] is None else values[c]
                                          for c in SUMMARY_COLUMNS[1:]])


def table(rows, columns):
    """ fixed-width text table for --pretty """
    def cell(value):
        if value is None:
            return '-'
        if isinstance(value, float):
            return f'{value:.3f}'
        return str(value)

    cells = [[cell(row.get(column)) for column in columns] for row in rows]
    widths = [max([len(column)] + [len(line[i]) for line in cells])
              for i, column in enumerate(columns)]
    lines = ['  '.join(column.ljust(width) for column, width in zip(columns, widths))]
    lines.append('  '.join('-' * width for width in widths))
    lines += ['  '.join(value.ljust(width) for value, width in zip(line, widths))
              for line in cells]
    return '\n'.join(lines)


def require_traces(traces, baseline_trace):
    if traces and baseline_trace is None:
        raise MetricsInputError('variant traces need --baseline-trace to be compared against')
