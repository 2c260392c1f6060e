##########################################################################################
# dickepulse/hamiltonian.py
##########################################################################################
"""Hamiltonians of N coupled quantum dots driven by a laser, in the Dicke basis.

In the frame rotating with the laser, the dots obey
    H = dw Jz + g exp(i phi) J+ + g exp(-i phi) J- + W (J^2 - Jz^2)
where dw = (band gap) - (laser frequency). J^2 is constant in the symmetric sector, so its
contribution W J(J+1) is dropped everywhere.

Tuning dw = -W (2J - 2i - 1) brings exactly one ladder transition, |J,-J+i> <->
|J,-J+i+1>, into resonance; this is pulse "step" i. When W >> J g, the rotating wave
approximation leaves only that transition, with Rabi frequency Omega_i.
"""
##########################################################################################

import numbers
import numpy as np
import scipy.linalg

from dickepulse.dicke_core  import build_collective_matrices, ladder_coeff
from dickepulse._exceptions import DickeDomainError, DickeInvariantFailure
from dickepulse._utils      import _max_abs, _n_dots, _step_index, _wrap_phase

HERMITIAN_TOLERANCE = 1.e-12

##########################################################################################
# PulseSpec
##########################################################################################

class PulseSpec(object):
    """One rectangular laser pulse, resonant with ladder step i.

    Attributes:
        step_index      ladder step i; the pulse couples levels k = i and k = i+1.
        duration        interaction time tau >= 0 (inverse energy units).
        phase           laser phase phi, reduced to [0, 2 pi).
        amplitude       laser amplitude g >= 0.
    """

    def __init__(self, step_index, duration, phase=0., amplitude=1.):

        if isinstance(step_index, bool) or \
           not isinstance(step_index, numbers.Integral) or step_index < 0:
            raise DickeDomainError('step index must be a nonnegative integer: '
                                   + repr(step_index))

        duration = float(duration)
        amplitude = float(amplitude)
        if not np.isfinite(duration) or duration < 0.:
            raise DickeDomainError('pulse duration must be finite and nonnegative: '
                                   + repr(duration))
        if not np.isfinite(amplitude) or amplitude < 0.:
            raise DickeDomainError('pulse amplitude must be finite and nonnegative: '
                                   + repr(amplitude))
        if not np.isfinite(phase):
            raise DickeDomainError('pulse phase must be finite: ' + repr(phase))

        self.step_index = int(step_index)
        self.duration = duration
        self.phase = _wrap_phase(phase)
        self.amplitude = amplitude

    def rotation_angle(self, n_dots):
        """The dimensionless rotation angle Omega_i * tau of this pulse."""

        return effective_rabi(n_dots, self.step_index, self.amplitude) * self.duration

    def __repr__(self):
        return (f'PulseSpec({self.step_index}, {self.duration!r}, {self.phase!r}, '
                f'{self.amplitude!r})')

##########################################################################################
# HermitianMatrix
##########################################################################################

class HermitianMatrix(object):
    """A dense Hermitian matrix with its time-evolution operator.

    Attributes:
        dimension       matrix dimension d.
        entries         read-only d x d complex array.
    """

    def __init__(self, entries):

        entries = np.array(entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DickeDomainError('Hermitian matrix must be square; shape is '
                                   + str(entries.shape))

        deviation = _max_abs(entries - entries.conj().T)
        if deviation > HERMITIAN_TOLERANCE:
            raise DickeInvariantFailure('matrix is not Hermitian; deviation %.3e'
                                        % deviation)

        entries.flags.writeable = False
        self.entries = entries
        self.dimension = entries.shape[0]
        self._spectrum = None

    def spectrum(self):
        """Eigenvalues and eigenvectors (columns), from scipy.linalg.eigh."""

        if self._spectrum is None:
            self._spectrum = scipy.linalg.eigh(self.entries)
        return self._spectrum

    def propagator(self, tau):
        """The unitary exp(-i H tau), by spectral decomposition."""

        (evals, evecs) = self.spectrum()
        return (evecs * np.exp(-1j * evals * tau)) @ evecs.conj().T

##########################################################################################
# Resonance condition and Rabi frequencies
##########################################################################################

def resonant_detuning(n_dots, i, w):
    """The detuning dw = -W (2J - 2i - 1) that makes ladder step i resonant.

    Input:
        n_dots      number of dots N.
        i           ladder step, 0 <= i <= N-1.
        w           interdot coupling W.
    """

    n_dots = _n_dots(n_dots)
    i = _step_index(n_dots, i)
    return float(w) * (2*i + 1 - n_dots)


def effective_rabi(n_dots, i, g):
    """Omega_i = g sqrt(J(J+1) - (J-i)(J-i-1)), the Rabi frequency of ladder step i."""

    n_dots = _n_dots(n_dots)
    i = _step_index(n_dots, i)
    j = n_dots / 2.
    return float(g) * np.sqrt(j * (j + 1.) - (j - i) * (j - i - 1.))

##########################################################################################
# Builders
##########################################################################################

def build_generic_hamiltonian(params, detuning, phase):
    """The rotating-frame Hamiltonian for an arbitrary detuning.

        H = dw Jz + g e^(i phi) J+ + g e^(-i phi) J- - W Jz^2

    Input:
        params      SystemParams; supplies N, W and g.
        detuning    laser detuning dw.
        phase       laser phase phi.

    Return          a HermitianMatrix of dimension N+1.
    """

    (jz, jplus, jminus) = build_collective_matrices(params.n_dots)

    coupling = params.g_amplitude * np.exp(1j * phase)
    entries = (float(detuning) * jz + coupling * jplus + coupling.conjugate() * jminus
               - params.w_coupling * (jz @ jz))

    return HermitianMatrix(entries)


def build_pulse_hamiltonian(params, pulse):
    """The Hamiltonian during one resonant pulse, with constants chosen so that the two
    resonant levels k = i and k = i+1 sit at zero energy.

    Diagonal entries are -W (m+J-i)(m+J-i-1) = -W (k-i)(k-i-1); off-diagonal entries are
    g e^(+/-i phi) times the ladder coefficients. The pulse amplitude is pulse.amplitude.
    """

    n_dots = params.n_dots
    i = _step_index(n_dots, pulse.step_index)

    k = np.arange(n_dots + 1, dtype=np.double)
    entries = np.diag(-params.w_coupling * (k - i) * (k - i - 1.)).astype(np.complex128)

    j = n_dots / 2.
    lower = np.arange(n_dots)
    couplings = (pulse.amplitude * np.exp(1j * pulse.phase)
                 * ladder_coeff(n_dots, lower - j, 'raise'))
    entries[lower + 1, lower] = couplings
    entries[lower, lower + 1] = couplings.conjugate()

    return HermitianMatrix(entries)


def build_effective_hamiltonian(params, pulse):
    """The rotating-wave Hamiltonian of one pulse: a single two-level coupling

        H_i = Omega_i (e^(i phi) |k=i+1><k=i| + e^(-i phi) |k=i><k=i+1|)

    embedded in the (N+1)-dimensional Dicke space.
    """

    n_dots = params.n_dots
    i = _step_index(n_dots, pulse.step_index)

    coupling = (effective_rabi(n_dots, i, pulse.amplitude)
                * np.exp(1j * pulse.phase))

    entries = np.zeros((n_dots + 1, n_dots + 1), dtype=np.complex128)
    entries[i + 1, i] = coupling
    entries[i, i + 1] = coupling.conjugate()

    return HermitianMatrix(entries)

##########################################################################################
