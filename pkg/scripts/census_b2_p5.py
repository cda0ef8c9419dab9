#!/usr/bin/env python3
"""Sweep all 16 voltage assignments on the two-loop bouquet at p = 5.

Usage:
    python scripts/census_b2_p5.py [--out PATH]

Prints one line per assignment: connectivity, Picard factors, and the set of
exponents whose mod-5 L-value vanishes.
"""

from __future__ import annotations

import argparse

from coverzeta import bouquet
from coverzeta.census import read_census, run_census


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="census_b2_p5.ndjson")
    args = parser.parse_args()
    summary = run_census(bouquet(2), 5, args.out)
    print(f"wrote {summary['written']} new rows to {args.out}\n")
    for row in read_census(args.out):
        if row["connected"]:
            print(
                f"  ({row['key']}): Pic0 {row['pic0']}, vanishing {row['vanishing']}, "
                f"verdicts all {'PASS' if all(v == 'PASS' for v in row['verdicts'].values()) else 'MIXED'}"
            )
        else:
            print(f"  ({row['key']}): disconnected, skipped")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
