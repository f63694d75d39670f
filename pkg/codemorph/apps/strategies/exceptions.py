from codemorph.apps.base.exceptions import CodemorphError


class UnknownStrategy(CodemorphError):
    code = 'unknown_strategy'
