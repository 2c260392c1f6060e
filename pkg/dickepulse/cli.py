##########################################################################################
# dickepulse/cli.py
##########################################################################################
"""Command-line interface: dickepulse synth | run | sweep | verify | targets

All energies are given in units of the laser amplitude g, so g = 1 throughout and W is
specified as the ratio W/g. Documents go to standard output unless --output is given;
warnings and error messages go to standard error.

Exit codes:
    0   success.
    2   invalid input (bad arguments, unreadable or malformed files, domain errors).
    3   a resource cap was exceeded.
    4   an internal invariant failed, including a failed verify report.
"""
##########################################################################################

import argparse
import sys

import numpy as np

from dickepulse.dicke_core  import DickeState, SystemParams
from dickepulse.fullspace   import VERIFY_TOLERANCE, crosscheck_dicke_restriction
from dickepulse.propagation import MODES, fit_infidelity_slope, run_sequence, rwa_sweep
from dickepulse.records     import format_result, format_schedule, format_sweep, \
                                   format_target, format_verify, load_schedule, \
                                   load_target, write_trajectory
from dickepulse.synthesis   import synthesize, target_coherent, target_dicke, \
                                   target_ghz_profile, target_uniform, target_w
from dickepulse._exceptions import DickeDomainError, DickeInvariantFailure, \
                                   DickeParseException

TARGET_KINDS = ('w', 'ghz', 'uniform', 'dicke', 'coherent')

EXIT_OK        = 0
EXIT_INPUT     = 2
EXIT_RESOURCE  = 3
EXIT_INVARIANT = 4

##########################################################################################
# Argument parsing
##########################################################################################

def _ratio_list(text):
    """argparse type for --ratios: comma-separated positive floats."""

    try:
        ratios = [float(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma-separated numbers: ' + repr(text))

    if not ratios:
        raise argparse.ArgumentTypeError('at least one ratio is required')

    return ratios


def build_parser():

    parser = argparse.ArgumentParser(prog='dickepulse',
                description='Compile and simulate laser pulse sequences that prepare '
                            'superpositions of Dicke states in quantum-dot ensembles.')
    commands = parser.add_subparsers(dest='command', required=True)

    synth = commands.add_parser('synth', help='compile a target file into a schedule')
    synth.add_argument('--target', required=True, help='TARGET document to prepare')
    synth.add_argument('--w-over-g', type=float, default=1000.,
                       help='Forster coupling in units of g (default 1000)')
    synth.add_argument('--output', help='file for the SCHEDULE document')

    run = commands.add_parser('run', help='propagate |J,-J> through a schedule')
    run.add_argument('--schedule', required=True, help='SCHEDULE document')
    run.add_argument('--mode', choices=MODES, default='effective',
                     help='two-level effective or complete Hamiltonian')
    run.add_argument('--target', help='optional TARGET document for the fidelity')
    run.add_argument('--trajectory', help='CSV file for the populations after each pulse')
    run.add_argument('--output', help='file for the RESULT document')

    sweep = commands.add_parser('sweep', help='full-mode fidelity versus W/g')
    sweep.add_argument('--target', required=True, help='TARGET document to prepare')
    sweep.add_argument('--ratios', type=_ratio_list, default=[100., 1000., 10000.],
                       help='ascending comma-separated values of W/g '
                            '(default 100,1000,10000)')
    sweep.add_argument('--workers', type=int, default=None,
                       help='number of threads evaluating ratios concurrently')
    sweep.add_argument('--output', help='file for the SWEEP document')

    verify = commands.add_parser('verify', help='cross-check against the product space')
    verify.add_argument('--n', type=int, required=True, help='number of dots, at most 12')
    verify.add_argument('--output', help='file for the VERIFY document')

    targets = commands.add_parser('targets', help='write a canned TARGET document')
    targets.add_argument('--kind', choices=TARGET_KINDS, required=True)
    targets.add_argument('--n', type=int, required=True, help='number of dots')
    targets.add_argument('--k', type=int, help='excitation count for --kind dicke')
    targets.add_argument('--theta', type=float, default=np.pi/2,
                         help='polar angle for --kind coherent (default pi/2)')
    targets.add_argument('--phi', type=float, default=0.,
                         help='azimuth for --kind coherent (default 0)')
    targets.add_argument('--output', help='file for the TARGET document')

    return parser

##########################################################################################
# Commands
##########################################################################################

def _emit(text, output):
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(output, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)


def cmd_synth(args):
    target = load_target(args.target)
    params = SystemParams(target.n_dots, args.w_over_g, 1.)
    _emit(format_schedule(synthesize(target, params)), args.output)
    return EXIT_OK


def cmd_run(args):
    seq = load_schedule(args.schedule)
    target = None if args.target is None else load_target(args.target)

    initial = DickeState.ground(seq.params.n_dots)
    record = run_sequence(initial, seq, args.mode, target)

    if args.trajectory is not None:
        write_trajectory(record, args.trajectory)

    _emit(format_result(record, len(seq)), args.output)
    return EXIT_OK


def cmd_sweep(args):
    target = load_target(args.target)
    params = SystemParams(target.n_dots, 1., 1.)
    points = rwa_sweep(target, params, args.ratios, workers=args.workers)

    try:
        slope = fit_infidelity_slope(points)
    except DickeDomainError:
        slope = None

    _emit(format_sweep(target.n_dots, points, slope), args.output)
    return EXIT_OK


def cmd_verify(args):
    report = crosscheck_dicke_restriction(args.n)
    _emit(format_verify(report, VERIFY_TOLERANCE), args.output)

    if not report.passed(VERIFY_TOLERANCE):
        print('dickepulse: verify failed for N = %d' % args.n, file=sys.stderr)
        return EXIT_INVARIANT

    return EXIT_OK


def cmd_targets(args):
    kind = args.kind
    if kind == 'w':
        state = target_w(args.n)
    elif kind == 'ghz':
        state = target_ghz_profile(args.n)
    elif kind == 'uniform':
        state = target_uniform(args.n)
    elif kind == 'dicke':
        if args.k is None:
            raise DickeDomainError('--kind dicke requires --k')
        state = target_dicke(args.n, args.k)
    else:
        state = target_coherent(args.n, args.theta, args.phi)

    _emit(format_target(state), args.output)
    return EXIT_OK


_COMMANDS = {
    'synth'  : cmd_synth,
    'run'    : cmd_run,
    'sweep'  : cmd_sweep,
    'verify' : cmd_verify,
    'targets': cmd_targets,
}

##########################################################################################
# Entry point
##########################################################################################

def main(argv=None):
    """Run the command line given by argv (default sys.argv[1:]); return the exit code.

    Argument errors detected by argparse raise SystemExit with code 2.
    MemoryError, including DickeResourceError, maps to EXIT_RESOURCE.
    """

    args = build_parser().parse_args(argv)

    try:
        return _COMMANDS[args.command](args)
    except (DickeDomainError, DickeParseException, OSError) as err:
        code = EXIT_INPUT
        message = str(err)
    except MemoryError as err:
        code = EXIT_RESOURCE
        message = str(err) or 'out of memory'
    except DickeInvariantFailure as err:
        code = EXIT_INVARIANT
        message = str(err)

    print(f'dickepulse {args.command}: error: {message}', file=sys.stderr)
    return code

##########################################################################################
