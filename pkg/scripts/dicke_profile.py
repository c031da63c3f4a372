"""Pair concurrence of every Dicke state |N/2, M> (default N = 15) as CSV."""

import argparse
import sys

from symconc import cli

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=15)
    parser.add_argument("--out", default="dicke.csv")
    args = parser.parse_args()
    sys.exit(cli.main(["sweep", "--family", "dicke", "--n", str(args.n), "--out", args.out]))
