##########################################################################################
# tests/__init__.py
##########################################################################################

import unittest

from tests.test_cli             import *
from tests.test_dicke_core      import *
from tests.test_fullspace       import *
from tests.test_hamiltonian     import *
from tests.test_propagation     import *
from tests.test_record_pyparser import *
from tests.test_records         import *
from tests.test_synthesis       import *
from tests.test_utils           import *

############################################
# Execute from command line...
############################################

if __name__ == '__main__':
    unittest.main(verbosity=2)

##########################################################################################
