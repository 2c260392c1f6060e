##########################################################################################
# dickepulse/fullspace.py
##########################################################################################
"""Collective operators in the full 2^N product space of N two-level dots.

Each dot is empty (0) or holds one exciton (1). A basis index is the binary number formed
by the dot states, dot 0 being the most significant digit. The collective operators are
sums of single-dot operators:
    J+ = sum_p sigma+_p,    J- = sum_p sigma-_p,    Jz = (1/2) sum_p (n_p - (1 - n_p))

These are compared against the Dicke-basis matrices through the isometry whose rows are
the normalized symmetric states with k excitations. Operators are scipy.sparse matrices;
a dense 2^12 x 2^12 complex matrix would need a quarter gigabyte.
"""
##########################################################################################

import numpy as np
import scipy.sparse as sparse
from scipy.special import comb

from dickepulse.dicke_core  import SystemParams, build_collective_matrices
from dickepulse.hamiltonian import build_generic_hamiltonian, resonant_detuning
from dickepulse._exceptions import DickeInvariantFailure, DickeResourceError
from dickepulse._utils      import _max_abs, _n_dots

FULLSPACE_MAX_DOTS = 12

VERIFY_TOLERANCE = 1.e-12

_SIGMA_PLUS = sparse.csr_matrix(np.array([[0., 0.], [1., 0.]], dtype=np.complex128))
_HALF_Z     = sparse.csr_matrix(np.diag([-0.5, 0.5]).astype(np.complex128))


def _check_cap(n_dots):
    n_dots = _n_dots(n_dots)
    if n_dots > FULLSPACE_MAX_DOTS:
        raise DickeResourceError(f'the product space of {n_dots} dots exceeds the cap '
                                 f'of {FULLSPACE_MAX_DOTS} dots')
    return n_dots


def _site_operator(op, p, n_dots):
    """op acting on dot p, identity on every other dot."""

    left = sparse.identity(2**p, dtype=np.complex128, format='csr')
    right = sparse.identity(2**(n_dots - p - 1), dtype=np.complex128, format='csr')
    return sparse.kron(sparse.kron(left, op), right, format='csr')

##########################################################################################
# Operators
##########################################################################################

def build_fullspace_collective(n_dots):
    """(Jz, J+, J-) as sparse 2^N x 2^N complex matrices in CSR format.

    Raises DickeResourceError for N above FULLSPACE_MAX_DOTS.
    """

    n_dots = _check_cap(n_dots)

    jz = _site_operator(_HALF_Z, 0, n_dots)
    jplus = _site_operator(_SIGMA_PLUS, 0, n_dots)
    for p in range(1, n_dots):
        jz = jz + _site_operator(_HALF_Z, p, n_dots)
        jplus = jplus + _site_operator(_SIGMA_PLUS, p, n_dots)

    jminus = jplus.conj().T.tocsr()
    return (jz.tocsr(), jplus.tocsr(), jminus)


def build_fullspace_hamiltonian(params, detuning, phase):
    """The laser-driven Hamiltonian in the product space, constant term included:

        H = dw Jz + g e^(i phi) J+ + g e^(-i phi) J- + W (J^2 - Jz^2)

    with J^2 - Jz^2 = J- J+ + Jz. Returned as a sparse CSR matrix.
    """

    (jz, jplus, jminus) = build_fullspace_collective(params.n_dots)

    coupling = complex(params.g_amplitude * np.exp(1j * phase))
    h = (float(detuning) * jz + coupling * jplus + coupling.conjugate() * jminus
         + params.w_coupling * (jminus @ jplus + jz))
    return h.tocsr()

##########################################################################################
# SymmetricIsometry
##########################################################################################

class SymmetricIsometry(object):
    """Map from the product space onto the symmetric (Dicke) sector.

    Attributes:
        n_dots      number of dots N.
        map         dense (N+1) x 2^N array; row k is the normalized symmetric state with
                    k excitations, i.e., |J,-J+k>.
    """

    def __init__(self, n_dots):

        self.n_dots = _check_cap(n_dots)

        indices = np.arange(2**self.n_dots)
        counts = np.zeros(indices.shape, dtype='int')
        for p in range(self.n_dots):
            counts += (indices >> p) & 1

        isometry = np.zeros((self.n_dots + 1, indices.size), dtype=np.complex128)
        for k in range(self.n_dots + 1):
            isometry[k, counts == k] = 1. / np.sqrt(comb(self.n_dots, k, exact=True))

        deviation = _max_abs(isometry @ isometry.conj().T - np.eye(self.n_dots + 1))
        if deviation > VERIFY_TOLERANCE:
            raise DickeInvariantFailure('symmetric states are not orthonormal; '
                                        'deviation %.3e' % deviation)

        isometry.flags.writeable = False
        self.map = isometry
        self.deviation = deviation

    def restrict(self, operator):
        """map . operator . map^dagger, an (N+1)x(N+1) dense array."""

        return self.map @ (operator @ self.map.conj().T)

    def projector_commutator(self, operator, chunk=256):
        """Largest elementwise modulus of [operator, P], with P = map^dagger . map.

        P is never formed. With R = H V^dagger - V^dagger (V H V^dagger), where V is the
        map, the commutator of a Hermitian H equals R V - V^dagger R^dagger; it is
        evaluated a block of rows at a time.
        """

        vdag = self.map.conj().T
        h_vdag = np.asarray(operator @ vdag)
        residual = h_vdag - vdag @ (self.map @ h_vdag)

        largest = 0.
        for start in range(0, vdag.shape[0], chunk):
            rows = slice(start, start + chunk)
            block = residual[rows] @ self.map - vdag[rows] @ residual.conj().T
            largest = max(largest, _max_abs(block))

        return largest


def build_symmetric_isometry(n_dots):
    return SymmetricIsometry(n_dots)

##########################################################################################
# Cross-check
##########################################################################################

class VerifyReport(object):
    """Maximum elementwise deviations found by crosscheck_dicke_restriction().

    Attributes:
        n_dots                  number of dots N.
        isometry                |map . map^dagger - I|.
        jz, jplus, jminus       restricted product-space operator minus Dicke matrix.
        hamiltonian             restricted product-space Hamiltonian minus the Dicke-basis
                                Hamiltonian plus W J(J+1), worst case over all resonant
                                detunings.
        projector_commutator    |[H, P]|, worst case over the same Hamiltonians.
    """

    FIELDS = ('isometry', 'jz', 'jplus', 'jminus', 'hamiltonian', 'projector_commutator')

    def __init__(self, n_dots, **deviations):
        self.n_dots = n_dots
        for name in VerifyReport.FIELDS:
            setattr(self, name, float(deviations[name]))

    def items(self):
        return [(name, getattr(self, name)) for name in VerifyReport.FIELDS]

    def passed(self, tolerance=VERIFY_TOLERANCE):
        return all(value <= tolerance for (_, value) in self.items())


def crosscheck_dicke_restriction(n_dots, *, w_coupling=1., g_amplitude=0.5, seed=0):
    """Compare the product-space operators with the Dicke-basis matrices.

    The Hamiltonian checks use every resonant detuning of the system, each with a laser
    phase drawn from a generator seeded with `seed`, so reports are reproducible.

    Return          a VerifyReport.
    """

    n_dots = _check_cap(n_dots)
    isometry = SymmetricIsometry(n_dots)

    full_ops = build_fullspace_collective(n_dots)
    dicke_ops = build_collective_matrices(n_dots)
    (jz, jplus, jminus) = [_max_abs(isometry.restrict(f) - d)
                           for (f, d) in zip(full_ops, dicke_ops)]

    params = SystemParams(n_dots, w_coupling, g_amplitude)
    constant = w_coupling * (n_dots / 2.) * (n_dots / 2. + 1.)
    rng = np.random.default_rng(seed)

    hamiltonian = 0.
    commutator = 0.
    for i in range(n_dots):
        detuning = resonant_detuning(n_dots, i, w_coupling)
        phase = rng.uniform(0., 2. * np.pi)

        h_full = build_fullspace_hamiltonian(params, detuning, phase)
        h_dicke = build_generic_hamiltonian(params, detuning, phase).entries

        restricted = isometry.restrict(h_full)
        deviation = _max_abs(restricted - h_dicke - constant * np.eye(n_dots + 1))
        hamiltonian = max(hamiltonian, deviation)
        commutator = max(commutator, isometry.projector_commutator(h_full))

    return VerifyReport(n_dots, isometry=isometry.deviation, jz=jz, jplus=jplus,
                        jminus=jminus, hamiltonian=hamiltonian,
                        projector_commutator=commutator)

##########################################################################################
