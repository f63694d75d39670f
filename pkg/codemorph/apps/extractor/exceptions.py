from codemorph.apps.base.exceptions import CodemorphError


class ParseFailure(CodemorphError):
    code = 'parse_failure'


class UnsupportedLanguage(CodemorphError):
    code = 'unsupported_language'
