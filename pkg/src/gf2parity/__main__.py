import sys

from gf2parity.cli import main

sys.exit(main())
