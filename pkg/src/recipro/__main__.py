import sys

from .cli_report import main

if __name__ == "__main__":
    sys.exit(main())
