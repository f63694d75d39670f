from dataclasses import asdict, dataclass, field
from codemorph._compat import StrEnum


class Outcome(StrEnum):
    OK = 'ok'
    DESCRIBED_NOT_CODED = 'described_not_coded'
    MALFORMED_FORMAT = 'malformed_format'
    REVERTED = 'reverted'


@dataclass(frozen=True)
class GenerationConfig:
    endpoint_url: str
    model_name: str
    temperature: float = 0.8
    top_k: int = 40
    top_p: float = 0.9
    seed: int = 0
    max_retries: int = 5
    timeout_s: float = 300.0

    def options(self, seed):
        return {'temperature': self.temperature,
                'top_k': self.top_k,
                'top_p': self.top_p,
                'seed': seed}

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class Completion:
    text: str
    # generation stopped at the context/length limit
    truncated: bool = False


@dataclass(frozen=True)
class GenerationResult:
    code_text: str
    raw_response: str
    attempts: int
    elapsed_s: float
    generated_line_count: int
    outcome: Outcome
    diagnoses: tuple = ()
    seeds: tuple = ()
    raw_responses: tuple = field(default=(), repr=False)

    @property
    def reverted(self):
        return self.outcome == Outcome.REVERTED

    def summary(self):
        return {
            'outcome': self.outcome.value,
            'attempts': self.attempts,
            'generated_line_count': self.generated_line_count,
            'diagnoses': [d.value for d in self.diagnoses],
            'seeds': list(self.seeds),
        }


def line_count(text):
    return len(text.splitlines()) if text else 0
