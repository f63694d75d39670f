from dataclasses import dataclass
from codemorph._compat import StrEnum

from django.conf import settings

from codemorph.apps.metrics.exceptions import MetricsInputError

# detector reports for the unmodified program use this variant id
BASELINE_ID = 'baseline'


class Verdict(StrEnum):
    BENIGN = 'benign'
    MALICIOUS = 'malicious'


class _Undefined(object):
    """ preservation rate of an empty set of evading variants """

    def __repr__(self):
        return 'UNDEFINED'

    def __str__(self):
        return 'undefined'

    def __bool__(self):
        return False


UNDEFINED = _Undefined()


@dataclass(frozen=True)
class DetectorReport:
    variant_id: str
    run_index: int
    detectors_total: int
    detectors_flagged: int


@dataclass(frozen=True)
class CallTrace:
    program_id: str
    calls: tuple

    @classmethod
    def from_calls(cls, program_id, calls):
        calls = tuple(str(call).strip() for call in calls)
        if any(not call for call in calls):
            raise MetricsInputError(f'trace {program_id} has an empty call identifier',
                                    program_id=program_id)
        return cls(program_id=program_id, calls=calls)

    def __len__(self):
        return len(self.calls)


@dataclass(frozen=True)
class PreservationConfig:
    delta: float = None

    def __post_init__(self):
        if self.delta is None:
            object.__setattr__(self, 'delta', settings.CODEMORPH_PRESERVATION_DELTA)
        if not 0 < self.delta <= 1:
            raise MetricsInputError(f'delta must be in (0, 1]: {self.delta}', delta=self.delta)
