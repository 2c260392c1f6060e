##########################################################################################
# dickepulse/synthesis.py
##########################################################################################
"""Compile a target superposition of Dicke states into a sequence of at most N pulses.

Starting from the zero-exciton state |J,-J>, pulse m is tuned to ladder step m. It leaves
the amplitude C_m behind on level m and pushes the rest of the population up to level
m+1. If r_m is the norm of the not-yet-placed amplitudes C_m, ..., C_N, the rotation
angle obeys
    cos(Omega_m tau_m) = |C_m| / r_m,        0 <= Omega_m tau_m <= pi/2
and then r_(m+1) = r_m sin(Omega_m tau_m). The laser phase of pulse m fixes the argument
of the amplitude that arrives on level m+1, so that it matches arg(C_(m+1)).

The procedure stops as soon as nothing remains to be placed, so a target whose last
nonzero amplitude is C_k needs exactly k pulses. A W state, |J,-J+1>, needs one.
"""
##########################################################################################

import numbers
import os
import numpy as np
from scipy.special import gammaln

from dickepulse.dicke_core  import DickeState, ZERO_AMPLITUDE, canonicalize_global_phase, \
                                   global_phase
from dickepulse.hamiltonian import PulseSpec, effective_rabi, resonant_detuning
from dickepulse._exceptions import DickeDomainError
from dickepulse._utils      import _n_dots, _wrap_phase
from dickepulse._warnings   import DickeRWAWarning, _warn

# Rotation angles may exceed pi/2 by this much through roundoff
_ANGLE_SLOP = 1.e-12

##########################################################################################
# RWA threshold, overridable via the environment variable DICKEPULSE_RWA_THRESHOLD
##########################################################################################

_DEFAULT_RWA_THRESHOLD = 10.
_RWA_THRESHOLD = _DEFAULT_RWA_THRESHOLD


def set_rwa_threshold(threshold=None):
    """Define the value of W/(J g) at or below which synthesize() issues a warning.

    Input:
        threshold   the new threshold. If None, the environment variable
                    DICKEPULSE_RWA_THRESHOLD is used if defined, otherwise 10.

    Return          the previous threshold.
    """

    global _RWA_THRESHOLD

    if threshold is None:
        try:
            threshold = float(os.environ['DICKEPULSE_RWA_THRESHOLD'])
        except KeyError:
            threshold = _DEFAULT_RWA_THRESHOLD
        except ValueError:
            raise DickeDomainError('DICKEPULSE_RWA_THRESHOLD is not a number: '
                                   + repr(os.environ['DICKEPULSE_RWA_THRESHOLD']))

    previous = _RWA_THRESHOLD
    _RWA_THRESHOLD = float(threshold)
    return previous


# Initialize at startup
set_rwa_threshold()

##########################################################################################
# PulseSequence
##########################################################################################

class PulseSequence(object):
    """An ordered list of pulses together with the system they drive.

    Attributes:
        params                  SystemParams.
        pulses                  tuple of PulseSpec objects, with strictly increasing step
                                indices.
        removed_global_phase    the global phase that was divided out of the target
                                before compiling; zero for hand-made sequences.
    """

    def __init__(self, params, pulses, removed_global_phase=0.):

        pulses = tuple(pulses)
        n_dots = params.n_dots

        if len(pulses) > n_dots:
            raise DickeDomainError(f'{len(pulses)} pulses exceed the limit of {n_dots} '
                                   f'for {n_dots} dots')

        previous = -1
        for pulse in pulses:
            if pulse.step_index <= previous:
                raise DickeDomainError('pulse step indices must be strictly increasing')
            if pulse.step_index >= n_dots:
                raise DickeDomainError(f'step index {pulse.step_index} is outside '
                                       f'0..{n_dots - 1}')
            if pulse.rotation_angle(n_dots) > np.pi/2 + _ANGLE_SLOP:
                raise DickeDomainError(f'rotation angle of step {pulse.step_index} '
                                       'exceeds pi/2')
            previous = pulse.step_index

        self.params = params
        self.pulses = pulses
        self.removed_global_phase = float(removed_global_phase)

    def __len__(self):
        return len(self.pulses)

    def __iter__(self):
        return iter(self.pulses)

    @property
    def rotation_angles(self):
        """Omega_i * tau_i for each pulse."""
        return [p.rotation_angle(self.params.n_dots) for p in self.pulses]

    @property
    def detunings(self):
        """Resonant detuning of each pulse."""
        return [resonant_detuning(self.params.n_dots, p.step_index,
                                  self.params.w_coupling) for p in self.pulses]

    @property
    def total_duration(self):
        return float(sum(p.duration for p in self.pulses))

##########################################################################################
# Recursion
##########################################################################################

def remaining_norm(target, m):
    """Norm of the amplitudes C_m, ..., C_N that the first m pulses have not yet placed.

    For a normalized target this equals sqrt(1 - sum_(l<m) |C_l|^2). It is evaluated from
    the tail instead, which is exactly zero when the tail is.

    Input:
        target      DickeState.
        m           number of levels already fixed, 0 <= m <= N+1.
    """

    if isinstance(m, bool) or not isinstance(m, numbers.Integral) or \
       not 0 <= m <= target.n_dots + 1:
        raise DickeDomainError(f'step must be an integer 0..{target.n_dots + 1}: {m!r}')

    tail = target.amplitudes[m:]
    return float(np.sqrt(np.sum(np.abs(tail)**2)))


def synthesize(target, params):
    """Compile a target state into a PulseSequence acting on |J,-J>.

    Input:
        target      DickeState to prepare. Its global phase is removed first (the first
                    nonzero amplitude becomes real and positive); the removed phase is
                    stored in the returned sequence.
        params      SystemParams; every pulse uses the amplitude params.g_amplitude.

    Return          a PulseSequence of at most N pulses. Under the effective two-level
                    Hamiltonian it maps |J,-J> onto the canonicalized target.

    A DickeRWAWarning is issued when W/(J g) does not exceed the configured threshold.
    """

    if target.n_dots != params.n_dots:
        raise DickeDomainError(f'target has {target.n_dots} dots but the system has '
                               f'{params.n_dots}')
    if params.g_amplitude <= 0.:
        raise DickeDomainError('synthesis needs a positive laser amplitude')

    if params.rwa_ratio <= _RWA_THRESHOLD:
        _warn('W/(J g) = %.6g does not satisfy W >> J g; the rotating wave '
              'approximation is doubtful' % params.rwa_ratio, DickeRWAWarning)

    removed_phase = global_phase(target)
    target = canonicalize_global_phase(target)
    coeffs = target.amplitudes
    n_dots = params.n_dots
    g = params.g_amplitude

    pulses = []
    arrived = 1. + 0j           # amplitude currently sitting on level m
    for m in range(n_dots):
        remaining = remaining_norm(target, m)
        if remaining_norm(target, m + 1) <= ZERO_AMPLITUDE:
            break

        angle = np.arccos(min(abs(coeffs[m]) / remaining, 1.))

        # -i e^(i phi) sin(angle) carries the amplitude from level m to m+1
        if abs(coeffs[m+1]) > ZERO_AMPLITUDE:
            phase = _wrap_phase(np.angle(coeffs[m+1]) - np.angle(arrived) + np.pi/2)
        else:
            phase = 0.

        arrived = -1j * np.exp(1j * phase) * np.sin(angle) * arrived
        duration = angle / effective_rabi(n_dots, m, g)
        pulses.append(PulseSpec(m, duration, phase, g))

    return PulseSequence(params, pulses, removed_global_phase=removed_phase)

##########################################################################################
# Canned targets
##########################################################################################

def target_dicke(n_dots, k):
    """The single Dicke state |J,-J+k>, which needs k pulses."""

    return DickeState.basis(n_dots, k)


def target_w(n_dots):
    """The N-dot W state, |J,-J+1>: one exciton shared symmetrically by all dots."""

    return DickeState.basis(n_dots, 1)


def target_ghz_profile(n_dots):
    """(|J,-J> + |J,J>)/sqrt(2), the GHZ state written in the Dicke basis. N >= 2."""

    n_dots = _n_dots(n_dots)
    if n_dots < 2:
        raise DickeDomainError('a GHZ profile needs at least two dots')

    amplitudes = np.zeros(n_dots + 1, dtype=np.complex128)
    amplitudes[0] = amplitudes[-1] = np.sqrt(0.5)
    return DickeState(n_dots, amplitudes)


def target_uniform(n_dots):
    """Equal-weight superposition of all N+1 Dicke states."""

    n_dots = _n_dots(n_dots)
    return DickeState(n_dots, np.full(n_dots + 1, 1. / np.sqrt(n_dots + 1)))


def target_coherent(n_dots, theta, phi=0.):
    """Spin-coherent state of polar angle theta and azimuth phi on the collective Bloch
    sphere; theta = 0 gives |J,-J> and theta = pi gives |J,J>.

    Amplitudes are sqrt(C(N,k)) sin(theta/2)^k cos(theta/2)^(N-k) e^(i k phi).
    """

    n_dots = _n_dots(n_dots)
    k = np.arange(n_dots + 1)

    # Logarithms keep binomials finite for large N
    ln_binom = gammaln(n_dots + 1) - gammaln(k + 1) - gammaln(n_dots - k + 1)

    (s, c) = (np.sin(theta / 2.), np.cos(theta / 2.))
    magnitudes = np.exp(0.5 * ln_binom) * s**k * c**(n_dots - k)

    return DickeState(n_dots, magnitudes * np.exp(1j * k * phi))

##########################################################################################
