from codemorph.apps.base.exceptions import CodemorphError


class TargetNotFound(CodemorphError):
    code = 'target_not_found'


class NameMismatch(CodemorphError):
    code = 'name_mismatch'


class HelperCollision(CodemorphError):
    code = 'helper_collision'
