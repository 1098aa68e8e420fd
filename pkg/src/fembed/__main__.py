import sys

from fembed.cli import main

sys.exit(main())
