##########################################################################################
# dickepulse/_utils.py
##########################################################################################
"""Internal utility functions
"""
##########################################################################################

import numbers
import numpy as np

from dickepulse._exceptions import DickeDomainError


def _float(arg):
    """Convert to floating-point; works for scalar, array, or array-like."""

    if isinstance(arg, numbers.Real):
        return float(arg)

    if isinstance(arg, np.ndarray) and not arg.shape:
        return float(arg[()])

    return np.asarray(arg, dtype=np.double)


def _n_dots(n_dots, *, name='n_dots'):
    """Validate a dot count and return it as a Python int.

    Integral floats such as 4.0 are accepted; anything else raises DickeDomainError.
    """

    if isinstance(n_dots, bool):
        raise DickeDomainError(f'{name} must be a positive integer: {n_dots!r}')

    if isinstance(n_dots, numbers.Integral):
        value = int(n_dots)
    elif isinstance(n_dots, numbers.Real) and float(n_dots).is_integer():
        value = int(n_dots)
    else:
        raise DickeDomainError(f'{name} must be a positive integer: {n_dots!r}')

    if value < 1:
        raise DickeDomainError(f'{name} must be a positive integer: {n_dots!r}')

    return value


def _step_index(n_dots, i):
    """Validate a ladder step index 0 <= i <= N-1 and return it as a Python int."""

    if isinstance(i, bool) or not isinstance(i, numbers.Integral):
        raise DickeDomainError(f'step index must be an integer: {i!r}')

    i = int(i)
    if i < 0 or i >= n_dots:
        raise DickeDomainError(f'step index {i} is outside 0..{n_dots - 1} for '
                               f'{n_dots} dots')
    return i


def _wrap_phase(phase):
    """Phase reduced to the interval [0, 2 pi)."""

    phase = float(phase) % (2. * np.pi)
    if phase >= 2. * np.pi:         # -tiny % 2pi can round up to 2pi exactly
        phase = 0.
    return phase


def _max_abs(array):
    """Largest elementwise modulus of an array, 0. if empty."""

    array = np.asarray(array)
    if array.size == 0:
        return 0.
    return float(np.max(np.abs(array)))

##########################################################################################
