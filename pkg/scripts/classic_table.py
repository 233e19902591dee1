#!/usr/bin/env python3
"""CSV table of classic k-peg move numbers: n, moves, diff, split.

Example:
    python scripts/classic_table.py --pegs 4 --max-n 20
"""

import argparse
import bisect
import csv
import sys

from gfshanoi import classic_params, gfs_prefix, smooth_stream, split_indices_up_to


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pegs", type=int, default=4, help="peg count k >= 3")
    parser.add_argument("--max-n", type=int, default=30, help="largest disk count")
    args = parser.parse_args()

    params = classic_params(args.pegs)
    values = gfs_prefix(params, args.max_n)
    diffs = [term.value for term in smooth_stream(params.bases, args.max_n)]
    marks = split_indices_up_to(params.bases, args.max_n) if args.pegs >= 4 else None

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "moves", "diff", "split"])
    for n in range(1, args.max_n + 1):
        split = bisect.bisect_right(marks, n) if marks is not None else ""
        writer.writerow([n, values[n], diffs[n - 1], split])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
