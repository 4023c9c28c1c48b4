"""Formula construction, parsing, printing and syntactic measures."""

import pytest
from hypothesis import given, strategies as st

from wmodal import syntax
from wmodal.syntax import (ParseError, atom, bot, box, conj, dia, disj, imp,
                           neg, parse, render, subformulas, top, var_set)

p1, p2, p3 = atom(1), atom(2), atom(3)


# ---------------------------------------------------------------------------
# Parsing

def test_parse_imp_dia():
    assert parse("p1 -> <>p2") is imp(p1, dia(p2))


def test_parse_negation_normalizes():
    assert parse("~p1") is imp(p1, bot)


def test_parse_top_normalizes():
    assert parse("top") is imp(bot, bot)


def test_parse_iff_normalizes():
    assert parse("p1 <-> p2") is conj(imp(p1, p2), imp(p2, p1))


def test_imp_right_associative():
    assert parse("p1 -> p2 -> p3") is imp(p1, imp(p2, p3))


def test_precedence_and_binds_tighter_than_or():
    assert parse("p1 | p2 & p3") is disj(p1, conj(p2, p3))


def test_precedence_unary_tightest():
    assert parse("~p1 & []p2") is conj(neg(p1), box(p2))


def test_unicode_aliases():
    assert parse("□p1 ∧ ◇p2") is conj(box(p1), dia(p2))
    assert parse("¬p1 → ⊥") is imp(neg(p1), bot)
    assert parse("⊤ ∨ p1") is disj(top, p1)
    assert parse("p1 ↔ p2") is parse("p1 <-> p2")


def test_bare_identifiers_get_fresh_indices():
    # q and r allocate fresh indices in first-occurrence order, skipping
    # the explicitly reserved p2.
    f = parse("q & p2 & r")
    assert f is conj(conj(atom(1), atom(2)), atom(3))


def test_same_identifier_same_index():
    f = parse("q -> q")
    assert f is imp(atom(1), atom(1))


@pytest.mark.parametrize("bad", ["p1 ->", "p0", "(p1", "p1 p2", "& p1", "$"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_parse_error_has_position():
    try:
        parse("p1 -> )")
    except ParseError as e:
        assert e.pos in (5, 6)  # start of the offending token (± whitespace)
    else:
        pytest.fail("expected ParseError")


# ---------------------------------------------------------------------------
# Printing

def test_render_examples():
    assert render(imp(p1, dia(p2))) == "p1 -> <>p2"
    assert render(bot) == "bot"
    assert render(box(conj(p1, p2))) == "[](p1 & p2)"
    assert render(top) == "top"
    assert render(neg(p1)) == "~p1"


def test_render_minimal_parens():
    assert render(disj(p1, conj(p2, p3))) == "p1 | p2 & p3"
    assert render(conj(disj(p1, p2), p3)) == "(p1 | p2) & p3"
    assert render(imp(imp(p1, p2), p3)) == "(p1 -> p2) -> p3"
    assert render(imp(p1, imp(p2, p3))) == "p1 -> p2 -> p3"


def formulas(max_leaves=8):
    leaf = st.sampled_from([p1, p2, p3, bot])
    return st.recursive(
        leaf,
        lambda sub: st.one_of(
            st.builds(conj, sub, sub), st.builds(disj, sub, sub),
            st.builds(imp, sub, sub), st.builds(box, sub),
            st.builds(dia, sub)),
        max_leaves=max_leaves)


@given(formulas())
def test_parse_render_roundtrip(f):
    assert parse(render(f)) is f


# ---------------------------------------------------------------------------
# Measures

def test_var_set_examples():
    assert var_set(conj(box(p1), dia(p2))) == frozenset({bot, p1, p2})
    assert var_set(top) == frozenset({bot})
    assert var_set(p1) == frozenset({bot, p1})


def test_complexity_examples():
    assert p1.complexity == 0
    assert bot.complexity == 0
    assert box(imp(p1, p2)).complexity == 2


def test_subformula_closure_examples():
    assert subformulas(box(p1)) == frozenset({box(p1), p1})
    assert subformulas(imp(p1, p2)) == frozenset({imp(p1, p2), p1, p2})
    assert subformulas(bot) == frozenset({bot})


@given(formulas())
def test_complexity_decreases_to_subformulas(f):
    for g in (f.left, f.right):
        if g is not None:
            assert g.complexity < f.complexity


@given(formulas())
def test_vars_monotone_under_subformulas(f):
    for g in subformulas(f):
        assert var_set(g) <= var_set(f)


def test_hash_consing_identity():
    assert parse("[]p1 -> <>(p1 & p2)") is parse("[]p1 -> <>(p1 & p2)")
    assert conj(p1, p2) is conj(p1, p2)
    assert conj(p1, p2) is not conj(p2, p1)


def test_atom_indices_start_at_one():
    with pytest.raises(ValueError):
        atom(0)
