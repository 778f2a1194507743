#!/usr/bin/env python3
"""Run every verification suite end to end and summarize the exit codes."""

import sys

from burstcover.cli import main as cli_main

SUITES = [
    ["verify", "appendix", "--max", "40"],
    ["verify", "equivalence", "--nmax", "63"],
    ["verify", "bounds"],
    ["verify", "patterns", "--family", "bch", "--m", "6"],
    ["verify", "patterns", "--family", "melas", "--m", "6"],
    ["verify", "patterns", "--family", "mixed"],
    ["verify", "charsums"],
]


def main():
    worst = 0
    for argv in SUITES:
        print(f"$ burstcover {' '.join(argv)}", file=sys.stderr)
        rc = cli_main(argv)
        print(f"  -> exit {rc}", file=sys.stderr)
        worst = max(worst, rc)
    return worst


if __name__ == "__main__":
    sys.exit(main())
