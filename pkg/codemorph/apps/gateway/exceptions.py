from codemorph.apps.base.exceptions import CodemorphError


class TransportError(CodemorphError):
    code = 'transport_error'


class ConfigError(CodemorphError):
    code = 'config_error'
