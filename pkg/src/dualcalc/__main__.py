"""python -m dualcalc"""

import sys

from dualcalc.main import main

sys.exit(main())
