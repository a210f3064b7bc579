"""Allow ``python -m homing`` as an alias for the ``homing`` script."""
import sys

from .cli import main

sys.exit(main())
