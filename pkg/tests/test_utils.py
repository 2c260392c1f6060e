##########################################################################################
# tests/test_utils.py
##########################################################################################

import numpy as np
import unittest
import warnings

from dickepulse._utils import (
    _float,
    _max_abs,
    _n_dots,
    _step_index,
    _wrap_phase,
)

from dickepulse._exceptions import DickeDomainError as dde
from dickepulse._warnings   import _reset_warnings, _warn


class Test_utils(unittest.TestCase):

    def test_utils_float(self):

        self.assertEqual(_float(3), 3.)
        self.assertIsInstance(_float(3), float)

        test = _float([3, -4])
        self.assertTrue(isinstance(test, np.ndarray))
        self.assertEqual(test.dtype, np.dtype('float64'))
        self.assertEqual(list(test), [3., -4.])

        test = _float(np.array(7))
        self.assertNotIsInstance(test, np.ndarray)
        self.assertIsInstance(test, float)

        for dtype in ('int8', 'uint8', 'uint16', 'int32', 'uint64', 'float32', 'float64'):
            digits = np.arange(10, dtype=dtype)
            test = _float(digits)
            self.assertIsInstance(test, np.ndarray)
            self.assertEqual(test.dtype, np.dtype('float64'))

            test = _float(digits[0])
            self.assertIsInstance(test, float)

    def test_utils_n_dots(self):

        self.assertEqual(_n_dots(4), 4)
        self.assertIsInstance(_n_dots(np.int32(4)), int)
        self.assertEqual(_n_dots(4.), 4)
        self.assertIsInstance(_n_dots(4.), int)

        for bad in (0, -1, 2.5, True, '3', None, np.nan):
            self.assertRaises(dde, _n_dots, bad)

        with self.assertRaises(dde) as context:
            _n_dots(0, name='N')
        self.assertTrue(str(context.exception).startswith('N '))

    def test_utils_step_index(self):

        self.assertEqual(_step_index(3, 0), 0)
        self.assertEqual(_step_index(3, np.int64(2)), 2)
        self.assertIsInstance(_step_index(3, np.int64(2)), int)

        for bad in (-1, 3, 1., True):
            self.assertRaises(dde, _step_index, 3, bad)

    def test_utils_wrap_phase(self):

        self.assertEqual(_wrap_phase(0.), 0.)
        self.assertEqual(_wrap_phase(2. * np.pi), 0.)
        self.assertAlmostEqual(_wrap_phase(-np.pi/2), 1.5 * np.pi, delta=1.e-15)
        self.assertAlmostEqual(_wrap_phase(7. * np.pi), np.pi, delta=1.e-14)

        # A tiny negative phase must not round up to 2 pi
        test = _wrap_phase(-1.e-17)
        self.assertGreaterEqual(test, 0.)
        self.assertLess(test, 2. * np.pi)

    def test_utils_max_abs(self):

        self.assertEqual(_max_abs([]), 0.)
        self.assertEqual(_max_abs([1., -3j, 2.]), 3.)
        self.assertIsInstance(_max_abs(np.zeros((2,2))), float)

    def test_warnings(self):

        _reset_warnings()
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            _warn('one')
            _warn('one')
            _warn('two')
        self.assertEqual([str(w.message) for w in caught], ['one', 'two'])

############################################
# Execute from command line...
############################################

if __name__ == '__main__':
    unittest.main(verbosity=2)

##########################################################################################
