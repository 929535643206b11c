import sys

from toyrsa.cli import main

sys.exit(main())
