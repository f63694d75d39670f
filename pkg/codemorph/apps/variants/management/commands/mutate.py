import logging

from codemorph.apps.base.commands import CodemorphCommand
from codemorph.apps.gateway.serializers import generation_config
from codemorph.apps.gateway.transports import transport_for
from codemorph.apps.metrics.reports import table
from codemorph.apps.strategies.catalog import parse_strategy_id
from codemorph.apps.variants.exceptions import ManifestError
from codemorph.apps.variants.management.commands._options import (
    add_gateway_arguments, add_plan_arguments)
from codemorph.apps.variants.planning import load_contexts, plan
from codemorph.apps.variants.serializers import load_manifest
from codemorph.apps.variants.synthesis import run_strategies
from codemorph.apps.variants.workspace import Workspace

logger = logging.getLogger(__name__)

RECORD_COLUMNS = ('variant_id', 'function', 'merge_status', 'compile_status', 'edit_lines',
                  'man_hours')


class Command(CodemorphCommand):
    help = "Generate, merge and build variants; exits 3 when a build needs a human fix"

    def add_arguments(self, parser):
        add_plan_arguments(parser)
        parser.add_argument('--strategy', action='append', default=[],
                            help='strategy id, repeatable (default: the manifest\'s strategies)')
        parser.add_argument('--workspace', required=True)
        add_gateway_arguments(parser)
        parser.add_argument('--pretty', action='store_true')

    def handle(self, *args, **options):
        manifest = load_manifest(options['manifest'])
        strategies = [parse_strategy_id(s) for s in options['strategy']] or list(
            manifest.strategies)
        if not strategies:
            raise ManifestError('no strategy given and the manifest lists none')
        cfg = generation_config(endpoint_url=options['endpoint'], model_name=options['model'],
                                seed=options['seed'])
        workspace = Workspace(options['workspace'])
        transport = transport_for(cfg, replay=options['replay'],
                                  record_dir=workspace.transcripts_dir)

        with workspace.lock():
            if workspace.plan_path.exists():
                logger.info(f'continuing with the plan in {workspace.plan_path}')
                modification_plan = workspace.load_plan()
            else:
                modification_plan = plan(manifest, load_contexts(manifest),
                                         shuffle_ties=options['shuffle_ties'],
                                         seed=options['seed'], prefix=options['prefix'])
                workspace.save_plan(modification_plan)
            records = run_strategies(manifest, modification_plan, strategies, cfg, workspace,
                                     transport=transport, batch_size=options['batch_size'])

        if options['pretty']:
            self.stdout.write(table([r.as_dict() for r in records], RECORD_COLUMNS))
        else:
            self.emit({'workspace': str(workspace.root),
                       'records': [r.as_dict() for r in records]})
