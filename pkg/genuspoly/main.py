"""
The MIT License

Copyright (c) 2026 the genuspoly authors

Permission is hereby granted, free of charge, to any person obtaining
a copy of this software and associated documentation files (the
"Software"), to deal in the Software without restriction, including
without limitation the rights to use, copy, modify, merge, publish,
distribute, sublicense, and/or sell copies of the Software, and to
permit persons to whom the Software is furnished to do so, subject to
the following conditions:

The above copyright notice and this permission notice shall be
included in all copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS
BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN
ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN
CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.

Command line front end. Exit codes: 0 success, 2 invalid input or I/O,
3 enumeration refused by the budget, 4 checkpoint mismatch.

"""

import argparse
import sys
from .err import *
from .version import __version__
from .config import main_config
from .catalog import main_generate
from .embedding import main_genus, main_faces, ENGINES
from .analysis import main_analyze
from .survey import main_survey

EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_CHECKPOINT = 4

def _positive_int(s):
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError('not an integer: %s' % s)
    if v < 1:
        raise argparse.ArgumentTypeError('must be at least 1: %s' % s)
    return v

def _positive_float(s):
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError('not a number: %s' % s)
    if not v > 0:
        raise argparse.ArgumentTypeError('must be positive: %s' % s)
    return v

def parser_add_common(parser):

    parser.add_argument('--workers', type=_positive_int, default=None,
                        help='worker processes (default: config, 0 there means all CPUs)')
    parser.add_argument('--format', choices=['csv', 'json'], default=None,
                        help='output format')
    parser.add_argument('--tol', type=_positive_float, default=None,
                        help='relative residual accepted for numerical roots')
    parser.add_argument('--budget', type=_positive_int, default=None,
                        help='largest number of rotation systems to enumerate')
    parser.add_argument('--force-budget', action='store_true',
                        help='enumerate even when the budget is exceeded')
    parser.add_argument('--engine', choices=ENGINES, default=None,
                        help='enumeration engine')
    parser.add_argument('--quiet', action='store_true', help='no progress bars')

def parser_add_graph(parser, required=True):

    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument('--g6', default=None, help='graph6 string')
    group.add_argument('--gp', nargs=2, type=int, metavar=('N', 'K'), default=None,
                       help='generalized Petersen graph G(N,K)')
    group.add_argument('--named', default=None, help='catalog graph, e.g. G18, G(8,2), K4')
    return group

def parser_add_genus(subparsers):

    parser = subparsers.add_parser('genus', help='genus distribution of one graph')
    parser_add_graph(parser)
    parser_add_common(parser)
    parser.set_defaults(func=main_genus)

def parser_add_analyze(subparsers):

    parser = subparsers.add_parser('analyze', help='log-concavity, real roots and the cone test')
    group = parser_add_graph(parser)
    group.add_argument('--coeffs', default=None, help='coefficients, constant term first, e.g. 2,14')
    parser_add_common(parser)
    parser.set_defaults(func=main_analyze)

def parser_add_survey(subparsers):

    parser = subparsers.add_parser('survey', help='survey a graph6 catalog of cubic graphs')
    parser.add_argument('catalog', help='graph6 catalog, one graph per line')
    parser.add_argument('-o', default=None, help='report file (default: stdout)')
    parser.add_argument('--resume', action='store_true', help='continue from the checkpoint')
    parser.add_argument('--strict', action='store_true',
                        help='fail on unparsable or non-cubic lines instead of skipping them')
    parser.add_argument('--checkpoint', default=None, help='checkpoint file (default: report + .ckpt)')
    parser.add_argument('--timings', action='store_true', help='add compute_millis to the report')
    parser_add_common(parser)
    parser.set_defaults(func=main_survey)

def parser_add_faces(subparsers):

    parser = subparsers.add_parser('faces', help='faces of one rotation system')
    parser_add_graph(parser)
    parser.add_argument('--index', type=int, default=0, help='rotation index')
    parser_add_common(parser)
    parser.set_defaults(func=main_faces)

def parser_add_generate(subparsers):

    parser = subparsers.add_parser('generate', help='print catalog graphs as graph6')
    group = parser_add_graph(parser)
    group.add_argument('--all-named', action='store_true', help='every named catalog graph')
    parser.set_defaults(func=main_generate)

def parser_add_config(subparsers):

    parser = subparsers.add_parser('config', help='show or change settings')
    parser.add_argument('-k', default=None, help='setting as section.option')
    parser.add_argument('-v', default=None, help='value')
    parser.set_defaults(func=main_config)

def build_parser():

    parser = argparse.ArgumentParser(prog='genuspoly',
                                     description='genus distributions and genus polynomials of small graphs')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    subparsers = parser.add_subparsers(dest='command', title='subcommands')
    subparsers.required = True
    parser_add_genus(subparsers)
    parser_add_analyze(subparsers)
    parser_add_survey(subparsers)
    parser_add_faces(subparsers)
    parser_add_generate(subparsers)
    parser_add_config(subparsers)
    return parser

def main(argv=None):

    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except BudgetExceededError as e:
        err_print(str(e))
        return EXIT_BUDGET
    except CheckpointMismatchError as e:
        err_print(str(e))
        return EXIT_CHECKPOINT
    except (InvalidInputError, IOError) as e:
        err_print(str(e))
        return EXIT_INPUT
    except (RootConvergenceError, FactorizationError) as e:
        err_print(str(e))
        return 1
    return 0

if __name__ == '__main__':
    sys.exit(main())
