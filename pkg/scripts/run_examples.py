#!/usr/bin/env python3
"""Analyze the four bundled example covers and print their tables.

Usage:
    python scripts/run_examples.py [--out-dir DIR]

Writes one report JSON per example when --out-dir is given.
"""

from __future__ import annotations

import argparse
import os

from coverzeta import build_report, bundled_spec, derive
from coverzeta.specfile import BUNDLED


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", help="directory for the JSON reports")
    args = parser.parse_args()
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
    for name in BUNDLED:
        cover = derive(bundled_spec(name))
        report = build_report(cover)
        print(f"== {name}: p={report.p}, voltages {','.join(map(str, report.voltages))}")
        print(f"   Pic0 invariant factors: {list(report.pic0)}")
        print(f"   p-primary factors: {list(report.sylow_factors)}, dim C = {report.dim_C}")
        print(report.format_table())
        statuses = {k: v.status for k, v in sorted(report.global_verdicts.items())}
        print(f"   verdicts: {statuses}")
        print(f"   all ok: {report.all_ok}\n")
        if args.out_dir:
            path = os.path.join(args.out_dir, f"{name}_report.json")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
