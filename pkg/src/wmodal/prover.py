"""Terminating backward proof search over the sequent calculi.

The engine explores set-normalized sequents depth-first.  Invertible
rules are applied eagerly with commitment; the remaining rules are
choice points explored with backtracking.  Loops are cut by blocking any
rule instance whose premise already occurs on the current branch; only
failures established without such blocks are memoized globally, so the
failure cache never hides a derivation that a different branch context
would permit.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Set, Tuple

from . import calculus
from .calculus import COPYING_RULES, INVERTIBLE_RULES, RuleInstance
from .logics import Logic
from .sequents import CLASSICAL, CONSTRUCTIVE, Sequent, norm_side
from .syntax import ATOM, Formula, bot

sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))

DEFAULT_MAX_NODES = 1_000_000
DEFAULT_TIMEOUT_SECS = 30.0


@dataclass(frozen=True)
class Budget:
    max_nodes: int = DEFAULT_MAX_NODES
    timeout_secs: float = DEFAULT_TIMEOUT_SECS


class BudgetExceeded(Exception):
    def __init__(self, reason: str, nodes: int, elapsed: float):
        super().__init__("budget exceeded (%s) after %d nodes, %.2fs"
                         % (reason, nodes, elapsed))
        self.reason = reason
        self.nodes = nodes
        self.elapsed = elapsed


class Derivation:
    """A derivation tree; conclusions are set-normalized sequents."""

    __slots__ = ("rule", "conclusion", "principal", "children", "height")

    def __init__(self, rule: str, conclusion: Sequent,
                 principal: Tuple[Formula, ...] = (),
                 children: Tuple["Derivation", ...] = ()):
        self.rule = rule
        self.conclusion = conclusion
        self.principal = principal
        self.children = children
        self.height = 1 + max((c.height for c in children), default=-1)

    def __repr__(self):
        return "Derivation(%s; %s)" % (self.rule, self.conclusion)

    def steps(self):
        """Pre-order traversal."""
        yield self
        for c in self.children:
            yield from c.steps()

    def pretty(self, indent: int = 0) -> str:
        lines = ["%s%s   [%s]" % ("  " * indent, self.conclusion, self.rule)]
        for c in self.children:
            lines.append(c.pretty(indent + 1))
        return "\n".join(lines)


@dataclass
class SearchStats:
    nodes: int = 0
    loop_blocks: int = 0
    elapsed: float = 0.0


@dataclass
class ProofResult:
    proved: bool
    derivation: Optional[Derivation]
    stats: SearchStats


class Engine:
    """Per-logic search engine with persistent success/failure caches."""

    def __init__(self, logic: Logic):
        self.logic = logic
        self.invertible = INVERTIBLE_RULES[logic.mode]
        self.choice_rules = [r for r in logic.rules if r not in self.invertible]
        self.eager_rules = [r for r in self.invertible
                            if r in logic.rules and r not in ("init", "Lbot")]
        self.proved: Dict[Sequent, Derivation] = {}
        self.failed: Set[Sequent] = set()

    # -- public -----------------------------------------------------------
    def prove(self, seq: Sequent, budget: Budget = Budget()) -> ProofResult:
        seq = seq.normalized()
        self._nodes = 0
        self._blocks = 0
        self._max_nodes = budget.max_nodes
        self._start = time.monotonic()
        self._deadline = self._start + budget.timeout_secs
        try:
            deriv, _ = self._search(seq, set())
        finally:
            elapsed = time.monotonic() - self._start
        stats = SearchStats(self._nodes, self._blocks, elapsed)
        return ProofResult(deriv is not None, deriv, stats)

    # -- internals --------------------------------------------------------
    def _tick(self):
        self._nodes += 1
        if self._nodes > self._max_nodes:
            raise BudgetExceeded("max-nodes", self._nodes,
                                 time.monotonic() - self._start)
        if self._nodes % 64 == 0 and time.monotonic() > self._deadline:
            raise BudgetExceeded("timeout", self._nodes,
                                 time.monotonic() - self._start)

    def _search(self, seq: Sequent, anc: set):
        """Returns (derivation or None, pure).

        pure means the failure (if any) was established without any
        ancestor block, so it may be cached unconditionally.
        """
        hit = self.proved.get(seq)
        if hit is not None:
            return hit, True
        if seq in self.failed:
            return None, True
        self._tick()

        # Closure rules.
        if bot in seq.ant:
            d = Derivation("Lbot", seq, (bot,))
            self.proved[seq] = d
            return d, True
        for f in seq.suc:
            if f.kind == ATOM and f in seq.ant:
                d = Derivation("init", seq, (f,))
                self.proved[seq] = d
                return d, True

        anc.add(seq)
        try:
            return self._expand(seq, anc)
        finally:
            anc.discard(seq)

    def _expand(self, seq: Sequent, anc: set):
        blocked_here = False

        # Eager phase: commit to the first unblocked invertible instance.
        for rule in self.eager_rules:
            committed = None
            for inst in calculus._instances(rule, seq):
                if any(p in anc for p in inst.premises):
                    blocked_here = True
                    self._blocks += 1
                    continue
                committed = inst
                break
            if committed is None:
                continue
            # Committing to any unblocked instance of an invertible rule is
            # complete, and a pure failure of its premises refutes the
            # conclusion regardless of blocks among skipped instances.
            pure = True
            kids = []
            for p in committed.premises:
                d, p_pure = self._search(p, anc)
                pure = pure and p_pure
                if d is None:
                    if pure:
                        self.failed.add(seq)
                    return None, pure
                kids.append(d)
            d = Derivation(rule, seq, committed.principal, tuple(kids))
            self.proved[seq] = d
            return d, True

        # Choice phase: backtracking over the remaining rules.
        pure = not blocked_here
        for rule in self.choice_rules:
            for inst in calculus._instances(rule, seq):
                if any(p in anc for p in inst.premises):
                    pure = False
                    self._blocks += 1
                    continue
                kids = []
                ok = True
                for p in inst.premises:
                    d, p_pure = self._search(p, anc)
                    pure = pure and p_pure
                    if d is None:
                        ok = False
                        break
                    kids.append(d)
                if ok:
                    d = Derivation(rule, seq, inst.principal, tuple(kids))
                    self.proved[seq] = d
                    return d, True
        if pure:
            self.failed.add(seq)
        return None, pure


_engines: Dict[str, Engine] = {}


def engine_for(logic: Logic) -> Engine:
    eng = _engines.get(logic.name)
    if eng is None:
        eng = _engines[logic.name] = Engine(logic)
    return eng


def prove(logic: Logic, seq: Sequent, budget: Budget = Budget()) -> ProofResult:
    """Decide derivability of seq in logic's calculus.

    Raises BudgetExceeded when the search budget runs out; a returned
    result is definitive either way.
    """
    if (seq.mode == CONSTRUCTIVE) != (logic.mode == CONSTRUCTIVE):
        raise ValueError("sequent mode %r does not match logic %s"
                         % (seq.mode, logic.name))
    return engine_for(logic).prove(seq, budget)


def goal(logic: Logic, f: Formula) -> Sequent:
    return Sequent((), (f,), logic.mode)


def decide(logic: Logic, f: Formula, budget: Budget = Budget()) -> bool:
    """True when f is a theorem of logic."""
    return prove(logic, goal(logic, f), budget).proved


def prove_from(logic: Logic, assumptions: Iterable[Formula], f: Formula,
               budget: Budget = Budget()) -> ProofResult:
    return prove(logic, Sequent(norm_side(assumptions), (f,), logic.mode), budget)


def check(logic: Logic, d: Derivation) -> bool:
    """Forward-check every step of d against logic's calculus."""
    for node in d.steps():
        if not node.children:
            concl = node.conclusion.normalized()
            if node.rule == "Lbot":
                if bot not in concl.ant:
                    return False
            elif node.rule == "init":
                if not any(f.kind == ATOM and f in concl.ant for f in concl.suc):
                    return False
            else:
                return False
            continue
        inst = RuleInstance(node.rule, node.conclusion,
                            tuple(c.conclusion for c in node.children),
                            node.principal)
        if not calculus.check_step(logic, inst):
            return False
    return True


def clear_caches():
    _engines.clear()
