from codemorph.apps.base.exceptions import CodemorphError


class EmptyTargets(CodemorphError):
    code = 'empty_targets'


class ContextOverflow(CodemorphError):
    code = 'context_overflow'


class ForeignTarget(CodemorphError):
    code = 'foreign_target'
