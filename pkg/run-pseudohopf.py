#!/usr/bin/env python3
import sys

from pseudohopf.utilities.cli import main as pseudohopf_main

sys.exit(pseudohopf_main(sys.argv[1:]))
