from dataclasses import asdict, dataclass, field
from codemorph._compat import StrEnum
from fnmatch import fnmatch
from pathlib import Path

from codemorph.apps.base.models import AbstractRecord, timestamp


class Derivation(StrEnum):
    ASCENDING_FUNCTION_COUNT = 'ascending_function_count'
    MANUAL = 'manual'


class CompileStatus(StrEnum):
    OK = 'ok'
    FAILED_AWAITING_HUMAN = 'failed_awaiting_human'
    OK_AFTER_HUMAN_FIX = 'ok_after_human_fix'


class MergeStatus(StrEnum):
    MERGED = 'merged'
    # the generated code broke a merge rule; the original function was kept
    NAME_MISMATCH_REVERTED = 'name_mismatch_reverted'
    HELPER_COLLISION_REVERTED = 'helper_collision_reverted'


@dataclass(frozen=True)
class ManifestFile:
    path: str
    language: str


@dataclass(frozen=True)
class ProjectManifest:
    root: Path
    files: tuple
    build_command: tuple
    variant_output_glob: str
    build_ok_pattern: str = None
    strategies: tuple = ()
    exclude: tuple = ()
    selection_override: dict = field(default_factory=dict)

    def is_excluded(self, path):
        return any(path == pattern or fnmatch(path, pattern) for pattern in self.exclude)

    @property
    def eligible_files(self):
        return [f for f in self.files if not self.is_excluded(f.path)]


@dataclass(frozen=True)
class PlannedFile:
    path: str
    language: str
    function_count: int
    ordinals: tuple
    function_names: tuple = ()

    @property
    def prefix_length(self):
        return len(self.ordinals)


@dataclass(frozen=True)
class ModificationPlan:
    files: tuple
    derivation: Derivation

    def as_dict(self):
        return {
            'derivation': self.derivation.value,
            'files': [{'path': f.path,
                       'language': f.language,
                       'function_count': f.function_count,
                       'modify': f.prefix_length,
                       'functions': list(f.function_names)} for f in self.files],
        }


@dataclass(kw_only=True)
class VariantRecord(AbstractRecord):
    variant_id: str
    strategy: str
    file: str
    prefix_t: int
    function: str
    generation: dict
    merge_status: str
    compile_status: str
    artifact_path: str = None
    edit_lines: int = 0
    man_hours: float = 0.0
    generation_seconds: float = 0.0
    checkpoint_at: str = None
    resumed_at: str = None

    def as_dict(self):
        return asdict(self)


@dataclass(kw_only=True)
class Checkpoint:
    file: str
    prefix_t: int
    strategy: str
    build_stdout_path: str
    build_stderr_path: str
    merged_path: str
    function: str
    region_names: list
    generation: dict
    merge_status: str
    generation_seconds: float = 0.0
    pending_strategies: list = field(default_factory=list)
    created_at: str = field(default_factory=timestamp)

    def as_dict(self):
        return asdict(self)


def variant_id(strategy, path, prefix_t):
    return f'{strategy}/{path}/{prefix_t}'
