"""
``codemorph`` command line: plan, mutate, resume, evaluate, report.

Exit status: 0 success, 1 domain error, 2 usage error, 3 halted at a human
checkpoint. Failures print one JSON line on stderr.
"""
import json
import logging
import os
import sys

logger = logging.getLogger(__name__)

COMMANDS = {
    'plan': 'codemorph.apps.variants',
    'mutate': 'codemorph.apps.variants',
    'resume': 'codemorph.apps.variants',
    'evaluate': 'codemorph.apps.metrics',
    'report': 'codemorph.apps.metrics',
}

USAGE = """usage: {prog} <command> [options]

commands:
  plan      order the manifest's files and pick the functions to modify
  mutate    generate, merge and build variants for one or more strategies
  resume    rebuild after a human fix and continue the halted run
  evaluate  per-variant detector rate, call-trace similarity and verdicts
  report    per-strategy summary of a workspace

`{prog} <command> --help` describes each command's options."""


def _setup():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'codemorph.settings')
    import django
    django.setup()


def diagnostic(command, error, level='error'):
    """ single-line JSON description of a failure """
    cause = error.__cause__ if error.__cause__ is not None else error
    if hasattr(cause, 'as_diagnostic'):
        payload = cause.as_diagnostic()
    else:
        payload = {'error': type(cause).__name__, 'message': str(error)}
    return json.dumps({'level': level, 'command': command, **payload}, default=str)


def run(argv=None, prog='codemorph'):
    """
    Dispatch ``argv`` (without the program name) to a management command.

    :return: exit status
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ('-h', '--help', 'help'):
        print(USAGE.format(prog=prog))
        return 0 if argv else 2
    if argv[0] == '--version':
        from codemorph import __version__
        print(f'{prog} {__version__}')
        return 0

    name = argv[0]
    if name not in COMMANDS:
        sys.stderr.write(json.dumps({'level': 'error', 'command': name, 'error': 'UsageError',
                                     'message': f'unknown command {name!r}'}) + '\n')
        return 2

    _setup()
    from django.core.management import CommandError, load_command_class
    command = load_command_class(COMMANDS[name], name)
    parser = command.create_parser(prog, name)
    try:
        options = parser.parse_args(argv[1:])
    except CommandError as e:
        sys.stderr.write(diagnostic(name, e) + '\n')
        return 2
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else 0

    options = vars(options)
    args = options.pop('args', ())
    try:
        command.execute(*args, **options)
    except CommandError as e:
        level = 'warning' if e.returncode == 3 else 'error'
        sys.stderr.write(diagnostic(name, e, level=level) + '\n')
        return e.returncode
    except Exception as e:
        logger.exception(f'{name} failed')
        sys.stderr.write(diagnostic(name, e) + '\n')
        return 1
    return 0


def main():
    sys.exit(run())
