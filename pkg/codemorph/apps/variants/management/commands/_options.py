import argparse


def positive_int(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {value}')
    return number


def add_gateway_arguments(parser):
    source = parser.add_mutually_exclusive_group()
    source.add_argument('--endpoint', help='chat-completion URL (default: CODEMORPH_ENDPOINT)')
    source.add_argument('--replay', help='directory of recorded model transcripts')
    parser.add_argument('--model', help='model name (default: CODEMORPH_MODEL)')
    parser.add_argument('--seed', type=int, help='base generation seed, also the tie shuffle seed')
    parser.add_argument('--batch-size', type=positive_int,
                        help='functions per prompt (default: CODEMORPH_BATCH_SIZE)')


def add_plan_arguments(parser):
    parser.add_argument('--manifest', required=True, help='project manifest (JSON)')
    parser.add_argument('--prefix', type=positive_int,
                        help='modify at most this many leading functions per file')
    parser.add_argument('--shuffle-ties', action='store_true',
                        help='order files with equal function counts randomly (see --seed)')
