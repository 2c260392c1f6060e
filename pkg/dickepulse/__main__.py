import sys

from dickepulse.cli import main

sys.exit(main())
