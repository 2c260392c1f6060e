##########################################################################################
# dickepulse/__init__.py
##########################################################################################
"""dickepulse: laser pulse compiler for superpositions of Dicke states

N identical quantum dots that each hold zero or one exciton, coupled to one another by a
Forster interaction W, behave in their fully symmetric sector like a single collective
spin J = N/2. The interaction makes each step of the excitation ladder |J,M> -> |J,M+1>
absorb at a different laser frequency, so a laser tuned to one step drives only that
step, provided W >> J g. This package exploits that selectivity:

- It compiles any target superposition of Dicke states into a sequence of at most N
  rectangular pulses that prepares it from the zero-exciton state |J,-J>.

- It simulates those pulses, either with the ideal two-level rotations or with the complete
  (N+1)-level Hamiltonian, which exposes leakage to off-resonant levels.

- It cross-checks the Dicke-basis operators against their 2^N-dimensional product-space
  definitions.


STATES AND PARAMETERS

Amplitude vectors use the index k = M + J, so k = 0 is |J,-J> and k = N is |J,J>.
DickeState holds a normalized, immutable amplitude vector; DickeState.ground(N) and
DickeState.basis(N, k) construct the basis states. SystemParams holds N, W and the laser
amplitude g. Units are arbitrary with hbar = 1; the command line uses g = 1.

Collective operators: ladder_coeff(), build_collective_matrices(). Overlaps and phases:
fidelity(), global_phase(), canonicalize_global_phase().


HAMILTONIANS

PulseSpec describes one pulse: ladder step, duration, laser phase and amplitude. The
functions resonant_detuning() and effective_rabi() give the laser detuning that addresses a
step and the Rabi frequency of that step. Hamiltonians are returned as HermitianMatrix
objects, which supply exp(-i H tau) through propagator():
    build_generic_hamiltonian(), build_pulse_hamiltonian(), build_effective_hamiltonian().


SYNTHESIS

synthesize() compiles a target DickeState into a PulseSequence. Canned targets:
    target_w(), target_ghz_profile(), target_uniform(), target_dicke(),
    target_coherent().

synthesize() warns (DickeRWAWarning) when W/(J g) does not exceed a threshold, by default
10. Use set_rwa_threshold() to change it; if the environment variable
DICKEPULSE_RWA_THRESHOLD is defined, its value is used at startup.


PROPAGATION

run_sequence() propagates a state through a PulseSequence in "effective" or "full" mode and
returns a SimulationRecord. rwa_sweep() measures the full-mode fidelity of freshly compiled
schedules as a function of W/g, and fit_infidelity_slope() fits the power law of the
resulting infidelity.


PRODUCT-SPACE VERIFICATION

crosscheck_dicke_restriction() builds the collective operators and the Hamiltonian as
sparse 2^N x 2^N matrices, restricts them to the symmetric sector and reports the
deviations from the Dicke-basis matrices in a VerifyReport. N is capped at
FULLSPACE_MAX_DOTS = 12; larger values raise DickeResourceError.


TEXT DOCUMENTS

Targets, schedules and results are exchanged as key/value text documents in the style of a
SPICE text kernel: format_target(), load_target(), format_schedule(), load_schedule(),
format_result(), format_sweep(), format_verify(), parse_document(). Trajectories are
written as CSV by write_trajectory(). For users familiar with the pyparsing module,
record_pyparser() returns the grammar itself.

The same operations are available from the command line as "dickepulse" or
"python -m dickepulse"; see dickepulse.cli.
"""

from dickepulse.dicke_core      import *
from dickepulse.hamiltonian     import *
from dickepulse.synthesis       import *
from dickepulse.propagation     import *
from dickepulse.fullspace       import *
from dickepulse.records         import *

from dickepulse.record_pyparser import record_pyparser

from dickepulse._warnings       import DickeRWAWarning, DickeNormalizationWarning
from dickepulse._exceptions     import *

try:
    from ._version import __version__
except ImportError as err:
    __version__ = 'Version unspecified'

##########################################################################################
