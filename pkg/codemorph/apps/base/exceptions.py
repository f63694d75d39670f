class CodemorphError(Exception):
    """
    Root of every domain error raised by codemorph.

    Management commands turn these into a ``CommandError`` and the CLI into a
    single-line JSON diagnostic, so ``details`` must stay JSON-serialisable.
    """
    code = 'codemorph_error'
    # process exit status when this error ends a command
    returncode = 1

    def __init__(self, message='', **details):
        super().__init__(message)
        self.details = details

    def as_diagnostic(self):
        return {'error': type(self).__name__,
                'code': self.code,
                'message': str(self),
                **self.details}
