import sys

from hgfree.cli import main

sys.exit(main())
