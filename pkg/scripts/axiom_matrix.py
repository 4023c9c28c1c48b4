#!/usr/bin/env python3
"""Print the full axiom-derivability matrix.

One row per logic, one column per axiom schema; each cell shows whether
the schema (instantiated at A=p1, B=p2) is a theorem, flagged when it
disagrees with the catalogue-derived expectation.

Usage: python3 scripts/axiom_matrix.py [--mode constructive|classical|both]
"""

import argparse
import sys

from wmodal import suites
from wmodal.logics import AXIOM_SCHEMAS, LOGICS, expected_axiom_status


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mode", choices=("constructive", "classical", "both"),
                    default="both")
    args = ap.parse_args()

    rows = suites.axiom_matrix()
    schemas = sorted(AXIOM_SCHEMAS)
    by_logic = {}
    for r in rows:
        by_logic.setdefault(r.logic, {})[r.schema] = r

    print("%-6s" % "", "".join("%-10s" % s for s in schemas))
    mismatches = 0
    for name in LOGICS:
        if args.mode != "both" and LOGICS[name].mode != args.mode:
            continue
        cells = []
        for s in schemas:
            r = by_logic[name][s]
            mark = "+" if r.got else "-"
            if not r.ok:
                mark += "!"
                mismatches += 1
            cells.append("%-10s" % mark)
        print("%-6s %s" % (name, "".join(cells)))
    print("\n%d cells, %d mismatches against the expectation table"
          % (len(rows), mismatches))
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
