"""Concurrence of one-axis twisted states over mu in [0, 2 pi] for N = 3..7."""

import argparse
import sys

from symconc import cli

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=201)
    parser.add_argument("--out", default="twist.csv")
    args = parser.parse_args()
    argv = ["sweep", "--family", "twist", "--grid", f"0:2pi:{args.steps}", "--out", args.out]
    for n in range(3, 8):
        argv += ["--n", str(n)]
    sys.exit(cli.main(argv))
