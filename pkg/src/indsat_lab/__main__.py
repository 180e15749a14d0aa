import sys

from indsat_lab.cli import main

sys.exit(main())
