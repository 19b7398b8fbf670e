import sys

from .dictcli.cli import main

sys.exit(main())
