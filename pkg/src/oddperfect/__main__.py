import sys

from oddperfect.cli import main

sys.exit(main())
