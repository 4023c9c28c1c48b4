"""Maehara-style Craig interpolation over the constructive calculi.

Given a cut-free derivation of Γ₁,Γ₂ ⇒ Δ, the extractor computes C with
Γ₁ ⇒ C and C,Γ₂ ⇒ Δ derivable and var(C) ⊆ var(Γ₁) ∩ var(Γ₂,Δ).  The
succedent always stays with the right part.  Certificates are produced
by re-running the prover on the two contract sequents, never by
transforming the input derivation, so an error anywhere in the case
table surfaces as a certificate failure rather than a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Tuple

from . import prover, syntax
from .logics import Logic
from .prover import Budget, Derivation
from .sequents import CONSTRUCTIVE, Sequent, norm_side
from .syntax import Formula, bot, box, conj, dia, disj, imp, top, var_set_all


class NotATheoremError(ValueError):
    pass


class CertificateError(RuntimeError):
    """An extracted interpolant failed its own contract; this indicates a
    bug in the case table, not bad input."""


@dataclass(frozen=True)
class Partition:
    left: Tuple[Formula, ...]
    right: Tuple[Formula, ...]


@dataclass(frozen=True)
class InterpolationResult:
    interpolant: Formula
    left_certificate: Derivation
    right_certificate: Derivation


def interpolate_derivation(logic: Logic, d: Derivation, part: Partition,
                           budget: Budget = Budget()) -> InterpolationResult:
    if logic.mode != CONSTRUCTIVE:
        raise ValueError("interpolation is defined for the constructive logics")
    concl = d.conclusion.normalized()
    left = frozenset(part.left)
    right = frozenset(part.right)
    if left | right != set(concl.ant) or not left <= set(concl.ant):
        raise ValueError("partition does not split the conclusion antecedent")
    c = _interp(d, left)
    return _certify(logic, c, left, set(concl.ant) - left, concl.suc, budget)


def craig(logic: Logic, a: Formula, b: Formula,
          budget: Budget = Budget()) -> InterpolationResult:
    """Interpolant for the theorem a -> b."""
    if logic.mode != CONSTRUCTIVE:
        raise ValueError("interpolation is defined for the constructive logics")
    res = prover.prove(logic, Sequent((a,), (b,), CONSTRUCTIVE), budget)
    if not res.proved:
        raise NotATheoremError("%s -> %s is not a theorem of %s"
                               % (syntax.render(a), syntax.render(b), logic.name))
    d = res.derivation
    left = frozenset(d.conclusion.ant)   # {a}
    c = _interp(d, left)
    return _certify(logic, c, left, frozenset(), d.conclusion.suc, budget)


def _certify(logic, c, left, right, suc, budget) -> InterpolationResult:
    lseq = Sequent(norm_side(left), (c,), CONSTRUCTIVE)
    rseq = Sequent(norm_side(set(right) | {c}), tuple(suc), CONSTRUCTIVE)
    lres = prover.prove(logic, lseq, budget)
    rres = prover.prove(logic, rseq, budget)
    if not (lres.proved and rres.proved):
        raise CertificateError("certificate re-proof failed for interpolant %s"
                               % syntax.render(c))
    if not var_set_all([c]) <= (var_set_all(left)
                                & var_set_all(list(right) + list(suc))):
        raise CertificateError("variable condition failed for interpolant %s"
                               % syntax.render(c))
    return InterpolationResult(c, lres.derivation, rres.derivation)


# ---------------------------------------------------------------------------
# The case table.  `left` is the Γ₁ part of the node's antecedent.

def _interp(d: Derivation, left: FrozenSet[Formula]) -> Formula:
    rule = d.rule
    pr = d.principal
    kids = d.children

    def sub(child, newleft):
        return _interp(child, frozenset(newleft) & set(child.conclusion.ant))

    # -- closures ---------------------------------------------------------
    if rule == "init":
        return pr[0] if pr[0] in left else top
    if rule == "Lbot":
        return bot if bot in left else top

    # -- propositional ----------------------------------------------------
    if rule == "Land":
        f = pr[0]
        nl = (left - {f}) | ({f.left, f.right} if f in left else set())
        return sub(kids[0], nl)
    if rule == "Lor":
        f = pr[0]
        c1 = sub(kids[0], (left - {f}) | ({f.left} if f in left else set()))
        c2 = sub(kids[1], (left - {f}) | ({f.right} if f in left else set()))
        return disj(c1, c2) if f in left else conj(c1, c2)
    if rule == "Limp":
        f = pr[0]
        if f not in left:
            c1 = sub(kids[0], left)
            c2 = sub(kids[1], left)
            return conj(c1, c2)
        # Left-sided principal: interpolate the first premise with the
        # partition swapped, then implication-combine.
        swapped = set(kids[0].conclusion.ant) - left
        dd = sub(kids[0], swapped)
        c2 = sub(kids[1], (left - {f}) | {f.right})
        return imp(dd, c2)
    if rule == "Rand":
        return conj(sub(kids[0], left), sub(kids[1], left))
    if rule == "Ror":
        return sub(kids[0], left)
    if rule == "Rimp":
        return sub(kids[0], left)   # the new antecedent member stays right

    # -- T rules ----------------------------------------------------------
    if rule == "iTbox":
        f = pr[0]
        nl = left | ({f.left} if f in left else set())
        return sub(kids[0], nl)
    if rule == "iTdia":
        return sub(kids[0], left)

    # -- context-free modal rules -----------------------------------------
    if rule == "iMbox":
        src = pr[1]
        return box(sub(kids[0], {src.left})) if src in left else top
    if rule == "iMdia":
        src = pr[1]
        return dia(sub(kids[0], {src.left})) if src in left else top
    if rule == "iD":
        src = pr[1]
        return box(sub(kids[0], {src.left})) if src in left else top
    if rule == "idualandM":
        fb, fd = pr
        bl, dl = fb in left, fd in left
        if bl and dl:
            return bot
        if bl:
            return box(sub(kids[0], {fb.left}))
        if dl:
            return dia(sub(kids[0], {fd.left}))
        return top
    if rule == "iDbox":
        f, g = pr
        fl, gl = f in left, g in left
        if fl and gl:
            return bot
        if fl:
            return box(sub(kids[0], {f.left}))
        if gl:
            return box(sub(kids[0], {g.left}))
        return top
    if rule == "iNbox" or rule == "iPdia":
        return top
    if rule == "iNdia" or rule == "iPbox":
        return bot if pr[0] in left else top

    # -- boxed-context modal rules ----------------------------------------
    if rule in ("iCbox", "iKbox", "iCD"):
        boxes = pr[1:]
        bl = {b.left for b in boxes if b in left}
        return box(sub(kids[0], bl)) if bl else top
    if rule == "iCDbox":
        boxes = pr
        bl = {b.left for b in boxes if b in left}
        br = {b.left for b in boxes if b not in left}
        if not bl:
            return top
        if not br:
            return bot
        return box(sub(kids[0], bl))
    if rule in ("iCdia", "iKdia"):
        f = pr[1]
        boxes = pr[2:]
        bl = {b.left for b in boxes if b in left}
        if f in left:
            return dia(sub(kids[0], bl | {f.left}))
        return box(sub(kids[0], bl)) if bl else top
    if rule in ("idualandC", "idualandK"):
        f = pr[0]
        boxes = pr[1:]
        bl = {b.left for b in boxes if b in left}
        br = {b.left for b in boxes if b not in left}
        if f in left:
            if br:
                return dia(sub(kids[0], bl | {f.left}))
            return bot
        return box(sub(kids[0], bl)) if bl else top

    raise CertificateError("no interpolation case for rule %r" % rule)


# ---------------------------------------------------------------------------
# Optional cosmetic simplification (CLI flag); certificate validity is
# re-checked by the caller after simplification.

def simplify(f: Formula) -> Formula:
    from .syntax import AND, BOX, DIA, IMP, OR
    if f.kind in (AND, OR, IMP):
        a, b = simplify(f.left), simplify(f.right)
        if f.kind == AND:
            if a is top:
                return b
            if b is top:
                return a
            if a is bot or b is bot:
                return bot
            return conj(a, b)
        if f.kind == OR:
            if a is bot:
                return b
            if b is bot:
                return a
            if a is top or b is top:
                return top
            return disj(a, b)
        if a is bot or b is top:
            return top
        if a is top:
            return b
        return imp(a, b)
    if f.kind == BOX:
        return box(simplify(f.left))
    if f.kind == DIA:
        return dia(simplify(f.left))
    return f
