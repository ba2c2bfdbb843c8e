#!/usr/bin/env python3
"""
Run script for the cliquetensor command line.
"""
import sys

from cliquetensor.main import main

if __name__ == "__main__":
    sys.exit(main())
