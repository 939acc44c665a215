#!/usr/bin/python
import sys
from wixtree.cli import main


if __name__ == "__main__":
    sys.exit(main())
