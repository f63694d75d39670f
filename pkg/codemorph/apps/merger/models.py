from dataclasses import dataclass, field
from codemorph._compat import StrEnum


class Provenance(StrEnum):
    TRANSFORMED = 'transformed'
    ORIGINAL = 'original'


@dataclass(frozen=True)
class TransformedFunction:
    original: object
    replacement_text: str
    new_headers: tuple = ()
    # (prototype, definition_text) per helper, in output order
    helper_functions: tuple = ()
    extra_declarations: tuple = ()
    helper_names: tuple = ()


@dataclass(frozen=True)
class MergedFile:
    text: str
    modified_ordinals: frozenset
    provenance: dict = field(default_factory=dict)
    new_headers: tuple = ()
    helper_names: tuple = ()
    target_names: tuple = ()

    @property
    def region_names(self):
        """ functions a human fix is measured against: targets plus helpers. """
        return self.target_names + self.helper_names
