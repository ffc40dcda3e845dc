import sys

from statuspairs.cli import main

sys.exit(main())
