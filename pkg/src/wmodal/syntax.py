"""Bimodal propositional formulas: hash-consed ASTs, parsing and printing.

The connective set is atoms, bot, &, |, ->, [] and <>.  Derived forms
(top, ~, <->) normalize at construction time, so the rest of the code
only ever sees the seven primitive constructors.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Optional

ATOM = "atom"
BOT = "bot"
AND = "and"
OR = "or"
IMP = "imp"
BOX = "box"
DIA = "dia"

_BINARY = (AND, OR, IMP)
_MODAL = (BOX, DIA)


class ParseError(ValueError):
    """Syntax error with a character position."""

    def __init__(self, message: str, pos: int):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


class Formula:
    """Immutable, interned formula node.

    Formulas are hash-consed: structurally equal formulas are the same
    object, so equality is identity and hashing is O(1).
    """

    __slots__ = ("kind", "left", "right", "index", "uid", "complexity", "size")

    def __init__(self, kind, left, right, index, uid, complexity, size):
        self.kind = kind
        self.left = left
        self.right = right
        self.index = index
        self.uid = uid
        self.complexity = complexity
        self.size = size

    def __hash__(self):
        return self.uid

    def __repr__(self):
        return "Formula(%s)" % render(self)

    # Sorting helper used for canonical multiset orderings: complexity
    # first, then a structural comparison.
    def struct_key(self):
        if self.kind == ATOM:
            return (self.complexity, 0, self.index)
        if self.kind == BOT:
            return (self.complexity, 1)
        rank = 2 + (AND, OR, IMP, BOX, DIA).index(self.kind)
        if self.kind in _MODAL:
            return (self.complexity, rank, self.left.struct_key())
        return (self.complexity, rank, self.left.struct_key(), self.right.struct_key())


_intern: dict = {}
_next_uid = [0]


def _mk(kind, left=None, right=None, index=0):
    key = (kind, left.uid if left else -1, right.uid if right else -1, index)
    f = _intern.get(key)
    if f is not None:
        return f
    cplx = 0 if kind in (ATOM, BOT) else 1
    size = 1
    if left is not None:
        cplx += left.complexity
        size += left.size
    if right is not None:
        cplx += right.complexity
        size += right.size
    f = Formula(kind, left, right, index, _next_uid[0], cplx, size)
    _next_uid[0] += 1
    _intern[key] = f
    return f


bot = _mk(BOT)


def atom(i: int) -> Formula:
    if i < 1:
        raise ValueError("atom indices start at 1")
    return _mk(ATOM, index=i)


def conj(a: Formula, b: Formula) -> Formula:
    return _mk(AND, a, b)


def disj(a: Formula, b: Formula) -> Formula:
    return _mk(OR, a, b)


def imp(a: Formula, b: Formula) -> Formula:
    return _mk(IMP, a, b)


def box(a: Formula) -> Formula:
    return _mk(BOX, a)


def dia(a: Formula) -> Formula:
    return _mk(DIA, a)


top = imp(bot, bot)


def neg(a: Formula) -> Formula:
    return imp(a, bot)


def iff(a: Formula, b: Formula) -> Formula:
    return conj(imp(a, b), imp(b, a))


def subformulas(f: Formula) -> frozenset:
    """Smallest set containing f and closed under immediate subformulas."""
    seen = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if g in seen:
            continue
        seen.add(g)
        if g.left is not None:
            stack.append(g.left)
        if g.right is not None:
            stack.append(g.right)
    return frozenset(seen)


def var_set(f: Formula) -> frozenset:
    """The variable set of f: always contains bot, plus every atom in f."""
    out = {bot}
    for g in subformulas(f):
        if g.kind == ATOM:
            out.add(g)
    return frozenset(out)


def var_set_all(fs: Iterable[Formula]) -> frozenset:
    out = {bot}
    for f in fs:
        out |= var_set(f)
    return frozenset(out)


def atoms_of(f: Formula):
    return sorted(g.index for g in subformulas(f) if g.kind == ATOM)


# ---------------------------------------------------------------------------
# Parsing

_UNICODE = {
    "⊥": " bot ",
    "⊤": " top ",
    "¬": " ~ ",
    "∧": " & ",
    "∨": " | ",
    "→": " -> ",
    "↔": " <-> ",
    "□": " [] ",
    "◇": " <> ",
    "⋄": " <> ",
}

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<arrow><->|->)|(?P<op>\[\]|<>|[&|~()])|(?P<word>[A-Za-z_][A-Za-z0-9_]*))"
)


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            if text[i:].strip() == "":
                break
            raise ParseError("unexpected character %r" % text[i:].lstrip()[0], i)
        tok = m.group("arrow") or m.group("op") or m.group("word")
        tokens.append((tok, m.start()))
        i = m.end()
    tokens.append((None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Optional[dict] = None, reserved=None):
        for u, repl in _UNICODE.items():
            text = text.replace(u, repl)
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        # Bare identifiers map to fresh indices in first-occurrence order,
        # skipping indices that appear explicitly as p<k> anywhere.
        self.names = names if names is not None else {}
        self.reserved = set(reserved) if reserved else set()
        self.reserved |= {
            int(t[1:]) for t, _ in self.tokens if t and re.fullmatch(r"p[0-9]+", t)
        }

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, tok):
        got, at = self.next()
        if got != tok:
            raise ParseError("expected %r, found %r" % (tok, got), at)

    def fresh_index(self, name):
        if name in self.names:
            return self.names[name]
        i = 1
        taken = self.reserved | set(self.names.values())
        while i in taken:
            i += 1
        self.names[name] = i
        return i

    def formula(self) -> Formula:
        lhs = self.or_level()
        if self.peek() == "->":
            self.next()
            return imp(lhs, self.formula())
        if self.peek() == "<->":
            self.next()
            return iff(lhs, self.or_level())
        return lhs

    def or_level(self) -> Formula:
        f = self.and_level()
        while self.peek() == "|":
            self.next()
            f = disj(f, self.and_level())
        return f

    def and_level(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.next()
            f = conj(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok, at = self.next()
        if tok == "[]":
            return box(self.unary())
        if tok == "<>":
            return dia(self.unary())
        if tok == "~":
            return neg(self.unary())
        if tok == "(":
            f = self.formula()
            self.expect(")")
            return f
        if tok == "bot":
            return bot
        if tok == "top":
            return top
        if tok is not None and re.fullmatch(r"p[0-9]+", tok):
            i = int(tok[1:])
            if i < 1:
                raise ParseError("atom indices start at 1", at)
            return atom(i)
        if tok is not None and re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            return atom(self.fresh_index(tok))
        raise ParseError("expected a formula, found %r" % (tok,), at)


def parse(text: str, names: Optional[dict] = None, reserved=None) -> Formula:
    """Parse a formula from its ASCII (or unicode-aliased) surface syntax."""
    p = _Parser(text, names, reserved)
    f = p.formula()
    tok, at = p.next()
    if tok is not None:
        raise ParseError("trailing input %r" % tok, at)
    return f


# ---------------------------------------------------------------------------
# Printing

_PREC = {IMP: 1, OR: 2, AND: 3}


def render(f: Formula) -> str:
    """Minimal-parenthesization printer; parse(render(f)) == f."""
    return _render(f, 0)


def _render(f: Formula, ctx: int) -> str:
    if f.kind == ATOM:
        return "p%d" % f.index
    if f.kind == BOT:
        return "bot"
    if f is top:
        return "top"
    if f.kind == IMP and f.right is bot:
        return "~" + _render(f.left, 4)
    if f.kind == BOX:
        return "[]" + _render(f.left, 4)
    if f.kind == DIA:
        return "<>" + _render(f.left, 4)
    prec = _PREC[f.kind]
    op = {IMP: " -> ", OR: " | ", AND: " & "}[f.kind]
    if f.kind == IMP:
        s = _render(f.left, prec + 1) + op + _render(f.right, prec)
    else:
        s = _render(f.left, prec) + op + _render(f.right, prec + 1)
    if prec < ctx:
        return "(" + s + ")"
    return s
