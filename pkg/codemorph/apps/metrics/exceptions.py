from codemorph.apps.base.exceptions import CodemorphError


class ZeroDetectors(CodemorphError):
    code = 'zero_detectors'


class EmptyVariantSet(CodemorphError):
    code = 'empty_variant_set'


class EmptyBaselineTrace(CodemorphError):
    code = 'empty_baseline_trace'


class MetricsInputError(CodemorphError):
    code = 'metrics_input_error'
