from codemorph.apps.base.commands import CodemorphCommand
from codemorph.apps.base.serializers import read_jsonl
from codemorph.apps.metrics.management.commands._inputs import add_input_arguments, load_inputs
from codemorph.apps.metrics.models import PreservationConfig
from codemorph.apps.metrics.reports import SUMMARY_COLUMNS, summarize, table, write_summary_csv
from codemorph.apps.variants.serializers import VariantRecordSerializer
from codemorph.apps.variants.workspace import Workspace


class Command(CodemorphCommand):
    help = "Summarise a run per strategy: W, H, mean detector rate, ASR and preservation rate"

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--workspace', help='workspace whose records.jsonl to read')
        source.add_argument('--records', help='a records.jsonl file')
        add_input_arguments(parser)
        parser.add_argument('--delta', type=float,
                            help='call-trace similarity threshold (default: '
                                 'CODEMORPH_PRESERVATION_DELTA)')
        parser.add_argument('--csv', help='also write the summary to this CSV file')

    def handle(self, *args, **options):
        if options['workspace']:
            records = Workspace(options['workspace']).records()
        else:
            records = [VariantRecordSerializer().create(dict(row))
                       for row in read_jsonl(options['records'], VariantRecordSerializer)]
        summary = summarize(records, cfg=PreservationConfig(options['delta']),
                            **load_inputs(options))
        if options['csv']:
            write_summary_csv(summary, options['csv'])
        if options['pretty']:
            rows = [{'strategy': strategy, **values} for strategy, values in summary.items()]
            self.stdout.write(table(rows, SUMMARY_COLUMNS))
        else:
            self.emit(summary)
