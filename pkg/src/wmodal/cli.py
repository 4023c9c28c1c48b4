"""Command-line front end.

Exit codes: 0 success, 1 negative answer (not derivable / no
countermodel / violations found), 2 budget exhausted, 64 usage or parse
errors.  `--format structured` emits line-delimited JSON with a version
field.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import interpolation, prover, semantics, suites, syntax
from .logics import LOGICS, get_logic
from .prover import Budget, BudgetExceeded
from .sequents import CONSTRUCTIVE, Sequent, parse_sequent
from .syntax import ParseError

EX_OK = 0
EX_NEGATIVE = 1
EX_BUDGET = 2
EX_USAGE = 64

FORMAT_VERSION = 1


class _Out:
    def __init__(self, structured: bool):
        self.structured = structured

    def emit(self, record: dict, text: str):
        if self.structured:
            record = {"version": FORMAT_VERSION, **record}
            print(json.dumps(record, sort_keys=True))
        elif text:
            print(text)


def _derivation_doc(d):
    return {
        "rule": d.rule,
        "sequent": str(d.conclusion),
        "premises": [_derivation_doc(c) for c in d.children],
    }


def _budget(args) -> Budget:
    return Budget(max_nodes=args.max_nodes, timeout_secs=args.timeout_secs)


def _parse_goal(logic, text):
    if "|-" in text:
        return parse_sequent(text, logic.mode)
    return Sequent((), (syntax.parse(text),), logic.mode)


def cmd_prove(args, out):
    logic = get_logic(args.logic)
    seq = _parse_goal(logic, args.input)
    res = prover.prove(logic, seq, _budget(args))
    if res.proved:
        out.emit({"command": "prove", "logic": logic.name, "status": "proved",
                  "nodes": res.stats.nodes,
                  "derivation": _derivation_doc(res.derivation)},
                 res.derivation.pretty())
        return EX_OK
    out.emit({"command": "prove", "logic": logic.name,
              "status": "not-derivable", "nodes": res.stats.nodes,
              "loop_blocks": res.stats.loop_blocks},
             "not derivable (%d nodes explored)" % res.stats.nodes)
    return EX_NEGATIVE


def cmd_decide(args, out):
    logic = get_logic(args.logic)
    f = syntax.parse(args.input)
    theorem = prover.decide(logic, f, _budget(args))
    out.emit({"command": "decide", "logic": logic.name,
              "formula": syntax.render(f),
              "status": "theorem" if theorem else "non-theorem"},
             "theorem" if theorem else "non-theorem")
    return EX_OK if theorem else EX_NEGATIVE


def cmd_interpolate(args, out):
    logic = get_logic(args.logic)
    names: dict = {}
    reserved = {int(m[1:]) for m in
                re.findall(r"\bp[0-9]+\b", args.a + " " + args.b)}
    a = syntax.parse(args.a, names, reserved)
    b = syntax.parse(args.b, names, reserved)
    try:
        res = interpolation.craig(logic, a, b, _budget(args))
    except interpolation.NotATheoremError as e:
        out.emit({"command": "interpolate", "logic": logic.name,
                  "status": "not-a-theorem"}, str(e))
        return EX_NEGATIVE
    c = res.interpolant
    if args.simplify:
        simpler = interpolation.simplify(c)
        if simpler is not c:
            try:
                res = interpolation._certify(
                    logic, simpler, frozenset({a}), frozenset(), (b,),
                    _budget(args))
                c = simpler
            except interpolation.CertificateError:
                pass
    out.emit({"command": "interpolate", "logic": logic.name,
              "status": "ok", "interpolant": syntax.render(c),
              "left_certificate": _derivation_doc(res.left_certificate),
              "right_certificate": _derivation_doc(res.right_certificate)},
             "interpolant: %s\nleft certificate:\n%s\nright certificate:\n%s"
             % (syntax.render(c), res.left_certificate.pretty(),
                res.right_certificate.pretty()))
    return EX_OK


def cmd_countermodel(args, out):
    logic = get_logic(args.logic)
    f = syntax.parse(args.input)
    found = semantics.enumerate_countermodel(logic, f, args.max_worlds)
    if found is None:
        out.emit({"command": "countermodel", "logic": logic.name,
                  "status": "none", "max_worlds": args.max_worlds},
                 "none up to size %d" % args.max_worlds)
        return EX_NEGATIVE
    model, world = found
    out.emit({"command": "countermodel", "logic": logic.name, "status": "found",
              "world": world, "model": json.loads(semantics.model_to_json(model))},
             "refuting world: %d\nmodel: %s" % (world,
                                                semantics.model_to_json(model)))
    return EX_OK


def cmd_check_model(args, out):
    logic = get_logic(args.logic)
    with open(args.model_file) as fh:
        model = semantics.model_from_json(fh.read())
    if (model.kind == CONSTRUCTIVE) != (logic.mode == CONSTRUCTIVE):
        out.emit({"command": "check-model", "status": "wrong-kind"},
                 "model kind %s does not fit logic %s" % (model.kind, logic.name))
        return EX_NEGATIVE
    report = semantics.check_conditions(model, logic)
    detail = {c: report.status[c] for c in report.required}
    ok = report.ok
    valid = None
    if args.input:
        f = syntax.parse(args.input)
        valid = semantics.valid_in_model(model, f)
        ok = ok and valid
    out.emit({"command": "check-model", "logic": logic.name,
              "conditions": detail,
              "witnesses": {k: list(v) for k, v in report.witnesses.items()},
              "formula_valid": valid,
              "status": "ok" if ok else "failed"},
             "conditions: %s%s" % (detail,
                                   "" if valid is None
                                   else "; formula valid: %s" % valid))
    return EX_OK if ok else EX_NEGATIVE


def cmd_selftest(args, out):
    rows, ok = suites.selftest(_budget(args))
    for r in rows:
        out.emit({"command": "selftest", "logic": r.logic, "schema": r.schema,
                  "expected": r.expected, "got": r.got, "ok": r.ok},
                 "%-6s %-28s expected=%-5s got=%-5s %s"
                 % (r.logic, r.schema, r.expected, r.got,
                    "ok" if r.ok else "MISMATCH"))
    out.emit({"command": "selftest", "status": "ok" if ok else "failed"},
             "selftest: %s" % ("ok" if ok else "FAILED"))
    return EX_OK if ok else EX_NEGATIVE


def cmd_fuzz(args, out):
    logic_filter = [args.logic] if args.logic else None
    counts = {}
    if args.count:
        counts = {k: args.count for k in
                  ("structural", "soundness", "disjunction",
                   "interpolation", "hereditariness")}
    violations = suites.fuzz(args.seed, counts, logic_filter)
    for v in violations:
        out.emit({"command": "fuzz", "violation": v}, "VIOLATION: %s" % v)
    out.emit({"command": "fuzz", "seed": args.seed,
              "violations": len(violations),
              "status": "ok" if not violations else "failed"},
             "fuzz (seed=%d): %d violations" % (args.seed, len(violations)))
    return EX_OK if not violations else EX_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wmodal",
        description="Decision procedures, interpolation and countermodels "
                    "for 28 constructive/classical non-normal modal logics.")
    ap.add_argument("--format", choices=("text", "structured"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, logic_required=True):
        p.add_argument("--logic", required=logic_required,
                       choices=sorted(LOGICS), metavar="LOGIC")
        p.add_argument("--format", choices=("text", "structured"),
                       default="text")
        p.add_argument("--max-nodes", type=int, default=prover.DEFAULT_MAX_NODES)
        p.add_argument("--timeout-secs", type=float,
                       default=prover.DEFAULT_TIMEOUT_SECS)

    p = sub.add_parser("prove", help="decide a sequent or formula, print proof")
    common(p)
    p.add_argument("input")
    p.set_defaults(fn=cmd_prove)

    p = sub.add_parser("decide", help="theorem / non-theorem")
    common(p)
    p.add_argument("input")
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("interpolate", help="Craig interpolant for A -> B")
    common(p)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--simplify", action="store_true")
    p.set_defaults(fn=cmd_interpolate)

    p = sub.add_parser("countermodel", help="exhaustive countermodel search")
    common(p)
    p.add_argument("input")
    p.add_argument("--max-worlds", type=int, default=3)
    p.set_defaults(fn=cmd_countermodel)

    p = sub.add_parser("check-model", help="check a serialized model")
    common(p)
    p.add_argument("model_file")
    p.add_argument("input", nargs="?", default=None,
                   help="optional formula to evaluate")
    p.set_defaults(fn=cmd_check_model)

    p = sub.add_parser("selftest", help="axiom and negative matrices")
    common(p, logic_required=False)
    p.set_defaults(fn=cmd_selftest)

    p = sub.add_parser("fuzz", help="randomized property suites")
    common(p, logic_required=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=None,
                   help="per-suite iteration count")
    p.set_defaults(fn=cmd_fuzz)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EX_USAGE if e.code not in (0, None) else 0
    out = _Out(args.format == "structured")
    try:
        return args.fn(args, out)
    except (ParseError, ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EX_USAGE
    except BudgetExceeded as e:
        print("budget exceeded: %s" % e, file=sys.stderr)
        return EX_BUDGET


if __name__ == "__main__":
    sys.exit(main())
