#!/usr/bin/env python3
"""Run the representation comparison over the bundled corpus.

Prints the human-readable report and optionally writes the CSV.
"""

import argparse
from pathlib import Path

from relnorm import corpus
from relnorm.baseline import bench


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=5, help="timing repetitions per measurement")
    parser.add_argument("--inner", type=int, default=25, help="inner loop size per repetition")
    parser.add_argument("--csv", type=Path, help="write the machine-readable report here")
    args = parser.parse_args()

    report = bench(corpus.load_all(), repetitions=args.reps, inner=args.inner)
    print(report.to_text(), end="")
    if args.csv:
        args.csv.write_text(report.to_csv(), encoding="utf-8")
        print(f"csv written to {args.csv}")


if __name__ == "__main__":
    main()
