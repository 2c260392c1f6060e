##########################################################################################
# dickepulse/dicke_core.py
##########################################################################################
"""Dicke-basis states, system parameters, and collective angular-momentum matrices.

For N two-level quantum dots in the fully symmetric sector, J = N/2 and the basis states
are |J,M> for M = -J, ..., J. Every amplitude vector in this package is stored with the
index k = M + J, so k = 0 is the zero-exciton state |J,-J> and k = N is the fully excited
state |J,J>.

Units: hbar = 1, so energies (W, g, detunings) and inverse times share one unit, and
products such as g*tau are dimensionless.
"""
##########################################################################################

import numbers
import numpy as np

from dickepulse._exceptions import DickeDomainError, DickeInvariantFailure
from dickepulse._utils      import _float, _n_dots

# A state whose squared norm differs from one by no more than this is accepted as is
NORM_TOLERANCE = 1.e-9

# Larger deviations up to this one are forgiven by renormalizing
RENORMALIZE_TOLERANCE = 1.e-6

# Amplitudes with a smaller modulus are treated as zero when a phase must be read off
ZERO_AMPLITUDE = 1.e-12

##########################################################################################
# DickeState
##########################################################################################

class DickeState(object):
    """A normalized pure state of N dots in the symmetric (Dicke) sector.

    Attributes:
        n_dots          number of dots N.
        amplitudes      read-only complex array of length N+1, indexed by k = M + J.
        renormalized    True if the constructor rescaled the input amplitudes.
        deviation       |sum |a_k|^2 - 1| of the amplitudes as given to the constructor.

    Instances are immutable and safe to share.
    """

    def __init__(self, n_dots, amplitudes, *, renormalize=True):
        """Constructor.

        Input:
            n_dots          number of dots N, a positive integer.
            amplitudes      N+1 complex amplitudes ordered from M = -J to M = +J.
            renormalize     True to rescale inputs whose squared norm deviates from one by
                            more than NORM_TOLERANCE but no more than
                            RENORMALIZE_TOLERANCE; larger deviations raise
                            DickeDomainError. False for vectors that must already be
                            normalized, such as propagated states; a deviation beyond
                            NORM_TOLERANCE then raises DickeInvariantFailure.
        """

        self.n_dots = _n_dots(n_dots)

        amplitudes = np.array(amplitudes, dtype=np.complex128)  # always a private copy
        if amplitudes.shape != (self.n_dots + 1,):
            raise DickeDomainError(f'{self.n_dots} dots need {self.n_dots + 1} '
                                   f'amplitudes; got shape {amplitudes.shape}')
        if not np.all(np.isfinite(amplitudes)):
            raise DickeDomainError('amplitudes must be finite')

        norm2 = float(np.sum(np.abs(amplitudes)**2))
        if norm2 == 0.:
            raise DickeDomainError('amplitude vector is zero')

        self.deviation = abs(norm2 - 1.)
        self.renormalized = False

        if self.deviation > NORM_TOLERANCE:
            if not renormalize:
                raise DickeInvariantFailure('state norm drifted by %.3e' % self.deviation)
            if self.deviation > RENORMALIZE_TOLERANCE:
                raise DickeDomainError('amplitudes are not normalized: squared norm '
                                       'is %.17g' % norm2)
            amplitudes /= np.sqrt(norm2)
            self.renormalized = True

        amplitudes.flags.writeable = False
        self.amplitudes = amplitudes

    @classmethod
    def basis(cls, n_dots, k):
        """The Dicke state |J,-J+k>."""

        n_dots = _n_dots(n_dots)
        if isinstance(k, bool) or not isinstance(k, numbers.Integral) or \
           not 0 <= k <= n_dots:
            raise DickeDomainError(f'basis index must be an integer 0..{n_dots}: {k!r}')

        amplitudes = np.zeros(n_dots + 1, dtype=np.complex128)
        amplitudes[k] = 1.
        return cls(n_dots, amplitudes)

    @classmethod
    def ground(cls, n_dots):
        """The zero-exciton state |J,-J>."""

        return cls.basis(n_dots, 0)

    @property
    def j(self):
        """Total collective spin J = N/2."""
        return self.n_dots / 2.

    @property
    def populations(self):
        return np.abs(self.amplitudes)**2

    @property
    def norm(self):
        return float(np.sqrt(np.sum(self.populations)))

    def __repr__(self):
        return f'DickeState({self.n_dots}, {list(self.amplitudes)!r})'

##########################################################################################
# SystemParams
##########################################################################################

class SystemParams(object):
    """Dot count, interdot coupling W and laser amplitude g of one system.

    Energies are in arbitrary but common units with hbar = 1.
    """

    def __init__(self, n_dots, w_coupling, g_amplitude=1., *, validate=True):
        """Constructor.

        Input:
            n_dots          number of dots N, a positive integer.
            w_coupling      interdot (Forster) coupling W.
            g_amplitude     laser amplitude g; default 1, i.e., energies in units of g.
            validate        True to require W > 0 and g > 0, the physical regime. False
                            permits W = 0 or g = 0 for exploring the Hamiltonian in its
                            limits; negative values are always rejected.
        """

        self.n_dots = _n_dots(n_dots)
        self.w_coupling = float(w_coupling)
        self.g_amplitude = float(g_amplitude)

        for name, value in (('w_coupling', self.w_coupling),
                            ('g_amplitude', self.g_amplitude)):
            if not np.isfinite(value) or value < 0.:
                raise DickeDomainError(f'{name} must be finite and nonnegative: {value!r}')
            if validate and value == 0.:
                raise DickeDomainError(f'{name} must be positive')

    @property
    def j(self):
        return self.n_dots / 2.

    @property
    def rwa_ratio(self):
        """W / (J g), the figure of merit for the rotating wave approximation."""

        if self.g_amplitude == 0.:
            return np.inf
        return self.w_coupling / (self.j * self.g_amplitude)

    def with_coupling(self, w_coupling):
        """A copy of these parameters with a new value of W."""

        return SystemParams(self.n_dots, w_coupling, self.g_amplitude)

    def __repr__(self):
        return (f'SystemParams({self.n_dots}, {self.w_coupling!r}, '
                f'{self.g_amplitude!r})')

##########################################################################################
# Ladder algebra
##########################################################################################

_DIRECTIONS = {'raise': 1, '+': 1, 'lower': -1, '-': -1}

def ladder_coeff(n_dots, m, direction='raise'):
    """Matrix element of J+ or J- acting on |J,m>.

    Input:
        n_dots      number of dots N; J = N/2.
        m           magnetic quantum number, -J <= m <= J, as a scalar, array, or
                    array-like. Values must differ from -J by an integer.
        direction   "raise" for sqrt(J(J+1) - m(m+1)), "lower" for
                    sqrt(J(J+1) - m(m-1)). Raising from m = J and lowering from m = -J are
                    legal and return zero.

    Return          the coefficient, as a float or an array of floats.
    """

    n_dots = _n_dots(n_dots)
    try:
        sign = _DIRECTIONS[direction]
    except (KeyError, TypeError):
        raise DickeDomainError('direction must be "raise" or "lower": '
                               + repr(direction))

    j = n_dots / 2.
    m = _float(m)

    k = m + j
    if np.any(np.abs(k - np.round(k)) > 1.e-9) or np.any(k < -1.e-9) or \
       np.any(k > n_dots + 1.e-9):
        raise DickeDomainError(f'm is not on the ladder -{j}..{j}: {m!r}')

    m = np.round(k) - j     # snap to the exact half-integer
    return np.sqrt(np.maximum(j * (j + 1.) - m * (m + sign), 0.))


def build_collective_matrices(n_dots):
    """The collective operators (Jz, J+, J-) as dense (N+1)x(N+1) complex matrices.

    Rows and columns use the index k = M + J. J+ has its nonzero entries at [k+1, k] and
    J- is the conjugate transpose of J+.
    """

    n_dots = _n_dots(n_dots)
    j = n_dots / 2.
    m = np.arange(n_dots + 1) - j

    jz = np.diag(m).astype(np.complex128)

    jplus = np.zeros((n_dots + 1, n_dots + 1), dtype=np.complex128)
    k = np.arange(n_dots)
    jplus[k + 1, k] = ladder_coeff(n_dots, m[:-1], 'raise')

    jminus = jplus.conj().T.copy()

    for matrix in (jz, jplus, jminus):
        matrix.flags.writeable = False

    return (jz, jplus, jminus)

##########################################################################################
# Overlaps and phases
##########################################################################################

def fidelity(a, b):
    """|<a|b>|^2 for two states of the same number of dots."""

    if a.n_dots != b.n_dots:
        raise DickeDomainError(f'fidelity between {a.n_dots}-dot and {b.n_dots}-dot '
                               'states is undefined')

    overlap = np.vdot(a.amplitudes, b.amplitudes)
    return min(max(float(abs(overlap)**2), 0.), 1.)


def global_phase(s):
    """Argument of the first amplitude whose modulus exceeds ZERO_AMPLITUDE."""

    nonzero = np.flatnonzero(np.abs(s.amplitudes) > ZERO_AMPLITUDE)
    if nonzero.size == 0:
        raise DickeDomainError('state has no nonzero amplitude')

    return float(np.angle(s.amplitudes[nonzero[0]]))


def canonicalize_global_phase(s):
    """The same state, rotated so that its first nonzero amplitude is real and positive.

    Amplitudes with modulus at or below ZERO_AMPLITUDE do not count as nonzero.
    """

    nonzero = np.flatnonzero(np.abs(s.amplitudes) > ZERO_AMPLITUDE)
    if nonzero.size == 0:
        raise DickeDomainError('state has no nonzero amplitude')

    first = s.amplitudes[nonzero[0]]
    if first.imag == 0. and first.real > 0.:
        return s

    amplitudes = s.amplitudes * np.exp(-1j * np.angle(first))
    amplitudes[nonzero[0]] = abs(first)

    return DickeState(s.n_dots, amplitudes)

##########################################################################################
