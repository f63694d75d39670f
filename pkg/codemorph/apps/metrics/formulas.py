"""
Evaluation formulas. Everything here is pure and safe to call from worker
threads.
"""
import math
import statistics

from codemorph.apps.metrics.exceptions import (
    EmptyBaselineTrace, EmptyVariantSet, MetricsInputError, ZeroDetectors)
from codemorph.apps.metrics.models import UNDEFINED, PreservationConfig, Verdict


def detector_rate(reports):
    """
    Mean share of detectors flagging a variant, in percent, over its scan runs.

    Runs may use different detector counts.
    """
    reports = list(reports)
    if not reports:
        raise MetricsInputError('detector_rate needs at least one report')
    for report in reports:
        if report.detectors_total <= 0:
            raise ZeroDetectors(f'{report.variant_id} run {report.run_index} has no detectors',
                                variant_id=report.variant_id, run_index=report.run_index)
        if not 0 <= report.detectors_flagged <= report.detectors_total:
            raise MetricsInputError(
                f'{report.variant_id} run {report.run_index}: flagged count out of range',
                variant_id=report.variant_id, run_index=report.run_index)
    return statistics.fmean(100 * r.detectors_flagged / r.detectors_total for r in reports)


def asr(variants, verdicts):
    """
    Attack success rate: percent of variants the target classifier calls benign.

    :param variants: variant ids
    :param verdicts: mapping variant id -> Verdict (or its value)
    """
    variants = list(variants)
    if not variants:
        raise EmptyVariantSet('asr needs at least one variant')
    missing = [v for v in variants if v not in verdicts]
    if missing:
        raise MetricsInputError(f'no verdict for {", ".join(missing)}', variants=missing)
    benign = sum(1 for v in variants if Verdict(verdicts[v]) == Verdict.BENIGN)
    return 100 * benign / len(variants)


def edit_workload(records):
    return sum(record.edit_lines for record in records)


def man_hours_total(records):
    return math.fsum(record.man_hours for record in records)


def _calls(trace):
    return trace.calls if hasattr(trace, 'calls') else tuple(trace)


def lcs_length(a, b):
    """ longest common subsequence of two call sequences; O(|a|·|b|) time, two rows """
    a, b = _calls(a), _calls(b)
    if len(b) > len(a):
        a, b = b, a
    previous = [0] * (len(b) + 1)
    for x in a:
        current = [0]
        for j, y in enumerate(b, 1):
            current.append(previous[j - 1] + 1 if x == y else max(previous[j], current[j - 1]))
        previous = current
    return previous[-1]


def normalized_lcs(baseline, variant):
    """ share of the baseline's call sequence the variant preserves, in [0, 1] """
    if not _calls(baseline):
        raise EmptyBaselineTrace('baseline trace has no calls',
                                 program_id=getattr(baseline, 'program_id', None))
    return lcs_length(baseline, variant) / len(_calls(baseline))


def preservation_rate(baseline_rate, variants, cfg=None):
    """
    Percent of the variants that evade better than the baseline and still
    behave like it.

    :param baseline_rate: detector rate of the unmodified program
    :param variants: (detector_rate, normalized_lcs) pairs
    :param cfg: PreservationConfig
    :return: percent, or UNDEFINED when no variant beats the baseline rate
    """
    cfg = cfg or PreservationConfig()
    evading = [nlcs for rate, nlcs in variants if rate < baseline_rate]
    if not evading:
        return UNDEFINED
    return 100 * sum(1 for nlcs in evading if nlcs >= cfg.delta) / len(evading)


def line_edit_count(a_text, b_text):
    """
    Added plus deleted lines of a minimal line diff from ``a_text`` to ``b_text``.
    A changed line counts twice. Whitespace-only changes count.
    """
    a, b = a_text.splitlines(), b_text.splitlines()
    return len(a) + len(b) - 2 * lcs_length(a, b)
