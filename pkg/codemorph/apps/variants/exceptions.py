from codemorph.apps.base.exceptions import CodemorphError


class ManifestError(CodemorphError):
    code = 'manifest_error'


class BuildToolMissing(CodemorphError):
    code = 'build_tool_missing'


class WorkspaceDirty(CodemorphError):
    code = 'workspace_dirty'


class WorkspaceLocked(CodemorphError):
    code = 'workspace_locked'


class NegativeDuration(CodemorphError):
    code = 'negative_duration'


class AwaitingHuman(CodemorphError):
    """ the build failed; the shadow tree waits for a human fix and `resume`. """
    code = 'awaiting_human'
    returncode = 3
