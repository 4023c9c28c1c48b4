"""Sequents, the single-succedent restriction, and formula readings."""

import pytest

from wmodal.sequents import (CLASSICAL, CONSTRUCTIVE, Sequent, interpret,
                             key_of, norm_side, parse_sequent)
from wmodal.syntax import atom, bot, conj, disj, imp, neg, parse

p1, p2, q = atom(1), atom(2), atom(3)


# ---------------------------------------------------------------------------
# interpret

def test_interpret_conjoined_antecedent():
    s = Sequent((p1, p2), (q,), CONSTRUCTIVE)
    assert interpret(s) is imp(conj(p1, p2), q)


def test_interpret_empty_empty_is_bot():
    assert interpret(Sequent((), (), CONSTRUCTIVE)) is bot


def test_interpret_empty_succedent_is_negation():
    assert interpret(Sequent((p1,), (), CONSTRUCTIVE)) is neg(p1)


def test_interpret_empty_antecedent_is_disjunction():
    assert interpret(Sequent((), (p1,), CONSTRUCTIVE)) is p1
    assert interpret(Sequent((), (p1, p2), CLASSICAL)) is disj(p1, p2)


def test_interpret_order_insensitive():
    assert (interpret(Sequent((p1, p2), (q,), CONSTRUCTIVE))
            is interpret(Sequent((p2, p1), (q,), CONSTRUCTIVE)))


# ---------------------------------------------------------------------------
# keys and normalization

def test_key_collapses_duplicates():
    a = Sequent((p1, p1), (q,), CLASSICAL)
    b = Sequent((p1,), (q,), CLASSICAL)
    assert key_of(a) == key_of(b)


def test_key_order_insensitive():
    a = Sequent((p1, p2), (q,), CONSTRUCTIVE)
    b = Sequent((p2, p1), (q,), CONSTRUCTIVE)
    assert key_of(a) == key_of(b)


def test_key_of_empty():
    assert key_of(Sequent((), (), CLASSICAL)) == \
        (frozenset(), frozenset(), CLASSICAL)


def test_normalized_dedups_and_sorts():
    s = Sequent((p2, p1, p2), (q,), CLASSICAL).normalized()
    assert s.ant == (p1, p2)
    assert norm_side((p2, p1, p2)) == (p1, p2)


# ---------------------------------------------------------------------------
# modes

def test_constructive_single_succedent_enforced():
    with pytest.raises(ValueError):
        Sequent((), (p1, p2), CONSTRUCTIVE)


def test_constructive_duplicate_succedent_allowed():
    # duplicates of a single formula still denote one succedent formula
    s = Sequent((), (p1, p1), CONSTRUCTIVE).normalized()
    assert s.suc == (p1,)


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        Sequent((), (), "modal")


# ---------------------------------------------------------------------------
# parsing

def test_parse_sequent_basic():
    s = parse_sequent("p1, p2 |- p1 & p2", CONSTRUCTIVE)
    assert s == Sequent((p1, p2), (conj(p1, p2),), CONSTRUCTIVE)


def test_parse_sequent_empty_sides():
    assert parse_sequent("p1 |-", CONSTRUCTIVE) == \
        Sequent((p1,), (), CONSTRUCTIVE)
    assert parse_sequent("|- p1", CONSTRUCTIVE) == \
        Sequent((), (p1,), CONSTRUCTIVE)


def test_parse_sequent_shares_name_table_across_formulas():
    # the same bare identifier denotes the same atom on both sides
    s = parse_sequent("a, b |- a", CONSTRUCTIVE)
    assert s.ant[0] is s.suc[0]
    assert s.ant[0] is not s.ant[1]


def test_parse_sequent_reserves_explicit_atoms_globally():
    # p2 on the right reserves index 2 even for identifiers on the left
    s = parse_sequent("a |- p2", CONSTRUCTIVE)
    assert s.ant == (atom(1),)
    assert s.suc == (atom(2),)


def test_parse_sequent_commas_inside_parens():
    s = parse_sequent("(p1 & p2) |- p1", CONSTRUCTIVE)
    assert s.ant == (conj(p1, p2),)


def test_parse_sequent_requires_turnstile():
    with pytest.raises(ValueError):
        parse_sequent("p1, p2", CONSTRUCTIVE)
