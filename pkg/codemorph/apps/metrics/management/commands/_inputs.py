from codemorph.apps.metrics.loaders import load_reports, load_trace, load_traces, load_verdicts
from codemorph.apps.metrics.reports import require_traces


def add_input_arguments(parser, reports_required=False):
    parser.add_argument('--reports', required=reports_required,
                        help='detector reports (JSON Lines)')
    parser.add_argument('--verdicts', help='classifier verdicts (JSON object or JSON Lines)')
    parser.add_argument('--traces', help='directory of variant call traces')
    parser.add_argument('--baseline-trace', help='call trace of the unmodified program')
    parser.add_argument('--baseline-rate', type=float,
                        help='detector rate of the unmodified program, in percent')
    parser.add_argument('--pretty', action='store_true')


def load_inputs(options):
    """ :return: dict of the inputs given on the command line, loaded """
    inputs = {
        'reports': load_reports(options['reports']) if options['reports'] else {},
        'verdicts': load_verdicts(options['verdicts']) if options['verdicts'] else {},
        'traces': load_traces(options['traces']) if options['traces'] else {},
        'baseline_trace': (load_trace(options['baseline_trace'], 'baseline')
                           if options['baseline_trace'] else None),
        'baseline_rate': options['baseline_rate'],
    }
    require_traces(inputs['traces'], inputs['baseline_trace'])
    return inputs
