#!/usr/bin/env python3
"""Run every verification suite with the default configuration."""

import sys

from rglat.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", "--suite", "all", "--seed", "7"]))
