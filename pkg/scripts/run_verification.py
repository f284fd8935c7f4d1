#!/usr/bin/env python3
"""Cross-check the solver against the brute-force oracle at desk scale.

Runs the `verify` subcommand over random DAGs (all three variants vs
exhaustive enumeration, plus the LexMax cross-check) and the diamond
chain family (efficient-path counts). Exits nonzero on the first
mismatch, leaving a reproduction instance file in the working directory.

Usage:
    python3 scripts/run_verification.py [--seeds 200]
"""

import argparse
import sys

from ordpaths.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=200,
                    help="instances per (n, p, K) combination")
    args = ap.parse_args()

    code = cli_main([
        "verify", "--family", "random-dag",
        "--n", *map(str, range(6, 13)),
        "--k", "2", "3", "5",
        "--p", "0.2", "0.4", "0.6",
        "--seeds", str(args.seeds),
    ])
    if code != 0:
        return code
    return cli_main([
        "verify", "--family", "exponential",
        "--n", "4", "7", "10", "13", "16", "--level", "2",
    ])


if __name__ == "__main__":
    sys.exit(main())
