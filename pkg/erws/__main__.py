import sys

from erws.cli.application import main

sys.exit(main())
