#!/usr/bin/env python3
"""
Min-count DFA learner.
Learns small automata from positive examples only by minimizing how many
short words they accept.

This file is the command-line entrypoint (see `python app.py --help`).
"""

from __future__ import annotations

import sys

from mincount_dfa.cli import main

if __name__ == "__main__":
    sys.exit(main())
