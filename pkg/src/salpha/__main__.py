import sys

from salpha.cli import main

sys.exit(main())
