from codemorph.apps.base.commands import CodemorphCommand
from codemorph.apps.gateway.serializers import generation_config
from codemorph.apps.gateway.transports import transport_for
from codemorph.apps.metrics.reports import table
from codemorph.apps.variants.management.commands._options import add_gateway_arguments
from codemorph.apps.variants.management.commands.mutate import RECORD_COLUMNS
from codemorph.apps.variants.serializers import load_manifest
from codemorph.apps.variants.synthesis import resume, run_strategies
from codemorph.apps.variants.workspace import Workspace


class Command(CodemorphCommand):
    help = "Rebuild the human-fixed shadow tree and continue the halted run"

    def add_arguments(self, parser):
        parser.add_argument('--manifest', required=True, help='project manifest (JSON)')
        parser.add_argument('--workspace', required=True)
        parser.add_argument('--man-hours', type=float,
                            help='hours spent on the fix, instead of the wall-clock time')
        add_gateway_arguments(parser)
        parser.add_argument('--pretty', action='store_true')

    def handle(self, *args, **options):
        manifest = load_manifest(options['manifest'])
        cfg = generation_config(endpoint_url=options['endpoint'], model_name=options['model'],
                                seed=options['seed'])
        workspace = Workspace(options['workspace'])
        transport = transport_for(cfg, replay=options['replay'],
                                  record_dir=workspace.transcripts_dir)

        with workspace.lock():
            modification_plan = workspace.load_plan()
            record, checkpoint = resume(manifest, workspace, man_hours=options['man_hours'])
            records = [record] + run_strategies(
                manifest, modification_plan,
                [checkpoint.strategy] + list(checkpoint.pending_strategies), cfg, workspace,
                transport=transport, batch_size=options['batch_size'])

        if options['pretty']:
            self.stdout.write(table([r.as_dict() for r in records], RECORD_COLUMNS))
        else:
            self.emit({'workspace': str(workspace.root),
                       'records': [r.as_dict() for r in records]})
