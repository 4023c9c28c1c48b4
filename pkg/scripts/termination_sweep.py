#!/usr/bin/env python3
"""Exhaustive decidability sweep.

Decides every formula up to a given AST size (over a small atom
alphabet) in every logic, reporting per-logic timing and theorem counts.
This is the operational check that backward search halts on the whole
small-formula space without hitting budgets.

Usage: python3 scripts/termination_sweep.py [--max-size 7] [--num-atoms 2]
       [--logics WK,K,...]
"""

import argparse
import sys
import time

from wmodal import prover, sampling
from wmodal.logics import LOGICS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=7)
    ap.add_argument("--num-atoms", type=int, default=2)
    ap.add_argument("--logics", default=None,
                    help="comma-separated subset (default: all 28)")
    ap.add_argument("--max-nodes", type=int, default=prover.DEFAULT_MAX_NODES)
    ap.add_argument("--timeout-secs", type=float,
                    default=prover.DEFAULT_TIMEOUT_SECS)
    args = ap.parse_args()

    names = args.logics.split(",") if args.logics else sorted(LOGICS)
    budget = prover.Budget(args.max_nodes, args.timeout_secs)
    space = sampling.formulas_up_to_size(args.max_size, args.num_atoms)
    print("sweeping %d formulas (size <= %d, %d atoms) over %d logics"
          % (len(space), args.max_size, args.num_atoms, len(names)))

    overruns = 0
    grand_start = time.monotonic()
    for name in names:
        logic = LOGICS[name]
        theorems = 0
        t0 = time.monotonic()
        for f in space:
            try:
                theorems += prover.decide(logic, f, budget)
            except prover.BudgetExceeded as e:
                overruns += 1
                print("  BUDGET EXCEEDED %s: %s" % (name, e))
        print("%-4s %6d theorems  %6.2fs" % (name, theorems,
                                             time.monotonic() - t0))
    print("total %.1fs, %d budget overruns" % (time.monotonic() - grand_start,
                                               overruns))
    return 1 if overruns else 0


if __name__ == "__main__":
    sys.exit(main())
