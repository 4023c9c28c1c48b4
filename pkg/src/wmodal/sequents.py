"""Sequents over the bimodal language.

A sequent is a pair of finite multisets ant |- suc.  Constructive-mode
sequents keep at most one succedent formula; classical-mode sequents are
unrestricted.  Since weakening and contraction are admissible in every
calculus used here, proof search works with duplicate-free, canonically
sorted sides; `key_of` exposes the underlying pair of sets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from . import syntax
from .syntax import Formula, ParseError

CLASSICAL = "classical"
CONSTRUCTIVE = "constructive"


def norm_side(fs: Iterable[Formula]) -> Tuple[Formula, ...]:
    """Duplicate-free side in a deterministic canonical order."""
    return tuple(sorted(set(fs), key=Formula.struct_key))


@dataclass(frozen=True)
class Sequent:
    ant: Tuple[Formula, ...]
    suc: Tuple[Formula, ...]
    mode: str

    def __post_init__(self):
        if self.mode not in (CLASSICAL, CONSTRUCTIVE):
            raise ValueError("unknown mode %r" % self.mode)
        if self.mode == CONSTRUCTIVE and len(set(self.suc)) > 1:
            raise ValueError("constructive sequents have at most one succedent")

    def normalized(self) -> "Sequent":
        return Sequent(norm_side(self.ant), norm_side(self.suc), self.mode)

    def __str__(self):
        left = ", ".join(syntax.render(f) for f in self.ant)
        right = ", ".join(syntax.render(f) for f in self.suc)
        return "%s |- %s" % (left, right)


def key_of(seq: Sequent):
    """Set-of-formulas view of a sequent, used for loop checking/caching."""
    return (frozenset(seq.ant), frozenset(seq.suc), seq.mode)


def interpret(seq: Sequent) -> Formula:
    """Formula reading of a sequent: conj(ant) -> disj(suc).

    The empty disjunction is bot; an empty antecedent contributes no
    implication.  Both folds follow the canonical side order.
    """
    suc = norm_side(seq.suc)
    if not suc:
        rhs = syntax.bot
    else:
        rhs = suc[0]
        for f in suc[1:]:
            rhs = syntax.disj(rhs, f)
    ant = norm_side(seq.ant)
    if not ant:
        return rhs
    lhs = ant[0]
    for f in ant[1:]:
        lhs = syntax.conj(lhs, f)
    return syntax.imp(lhs, rhs)


def parse_sequent(text: str, mode: str, names: Optional[dict] = None) -> Sequent:
    """Parse "A1, A2 |- B" (either side may be empty) in the given mode."""
    if "|-" not in text:
        raise ParseError("sequent must contain '|-'", 0)
    left_txt, _, right_txt = text.partition("|-")
    if names is None:
        names = {}
    reserved = {int(m[1:]) for m in re.findall(r"\bp[0-9]+\b", text)}

    def side(txt, offset):
        out = []
        depth = 0
        part = []
        for ch in txt:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "," and depth == 0:
                out.append("".join(part))
                part = []
            else:
                part.append(ch)
        out.append("".join(part))
        fs = []
        for chunk in out:
            if chunk.strip() == "":
                continue
            fs.append(syntax.parse(chunk, names, reserved))
        return tuple(fs)

    ant = side(left_txt, 0)
    suc = side(right_txt, len(left_txt) + 2)
    return Sequent(ant, suc, mode)
