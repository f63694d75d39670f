from codemorph.apps.base.commands import CodemorphCommand
from codemorph.apps.metrics.reports import table
from codemorph.apps.variants.management.commands._options import add_plan_arguments
from codemorph.apps.variants.planning import load_contexts, plan
from codemorph.apps.variants.serializers import load_manifest


class Command(CodemorphCommand):
    help = "Print which files and functions a run would modify"

    def add_arguments(self, parser):
        add_plan_arguments(parser)
        parser.add_argument('--seed', type=int, help='tie shuffle seed')
        parser.add_argument('--pretty', action='store_true')

    def handle(self, *args, **options):
        manifest = load_manifest(options['manifest'])
        modification_plan = plan(manifest, load_contexts(manifest),
                                 shuffle_ties=options['shuffle_ties'], seed=options['seed'],
                                 prefix=options['prefix'])
        if options['pretty']:
            rows = [{**entry, 'functions': ', '.join(entry['functions'])}
                    for entry in modification_plan.as_dict()['files']]
            self.stdout.write(f'derivation: {modification_plan.derivation}')
            self.stdout.write(table(rows, ('path', 'language', 'function_count', 'modify',
                                           'functions')))
        else:
            self.emit(modification_plan.as_dict())
