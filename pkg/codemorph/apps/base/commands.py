import json
import os
import sys

from django.core.management import BaseCommand, CommandError

from codemorph.apps.base.exceptions import CodemorphError


class CodemorphCommand(BaseCommand):
    """
    Base for codemorph management commands.

    Domain errors leave as ``CommandError`` carrying the error's exit status,
    with the original exception chained for the CLI's diagnostic line.
    """
    requires_system_checks = []

    def run_from_argv(self, argv):
        # `manage.py <command>` goes through the same entry point as bin/codemorph
        from codemorph.cli import run
        sys.exit(run(argv[1:], prog=os.path.basename(argv[0])))

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except CodemorphError as e:
            raise CommandError(str(e), returncode=e.returncode) from e

    def emit(self, payload):
        self.stdout.write(json.dumps(payload, default=str))
