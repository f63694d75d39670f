from dataclasses import dataclass
from codemorph._compat import StrEnum


class StrategyId(StrEnum):
    OPTIMIZATION = 'optimization'
    QUALITY = 'quality'
    REUSABILITY = 'reusability'
    SECURITY = 'security'
    OBFUSCATION = 'obfuscation'
    WINDOWS_API = 'windows_api'


@dataclass(frozen=True)
class StrategySpec:
    # a StrategyId value, or the name of a custom strategy from settings
    id: str
    title: str
    fragment: str
    builtin: bool = True

    def __str__(self):
        return self.id
