import sys

from .algfile.cli import main

sys.exit(main())
