from codemorph.apps.base.commands import CodemorphCommand
from codemorph.apps.metrics.management.commands._inputs import add_input_arguments, load_inputs
from codemorph.apps.metrics.reports import ROW_COLUMNS, evaluate_variants, table


class Command(CodemorphCommand):
    help = "Score each variant: detector rate, call-trace similarity and verdict"

    def add_arguments(self, parser):
        add_input_arguments(parser, reports_required=True)
        parser.add_argument('--runs-per-variant', type=int,
                            help='expected scan runs per variant')

    def handle(self, *args, **options):
        rows = evaluate_variants(**load_inputs(options),
                                 runs_per_variant=options['runs_per_variant'])
        if options['pretty']:
            self.stdout.write(table(rows, ROW_COLUMNS))
            return
        for row in rows:
            self.emit(row)
