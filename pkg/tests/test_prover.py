"""Proof search, proof objects, proof checking, deducibility."""

import random

import pytest

from wmodal import prover, sampling
from wmodal.logics import LOGICS, get_logic, instantiate_axiom
from wmodal.prover import Budget, BudgetExceeded, Derivation, check, decide, \
    prove, prove_from
from wmodal.sequents import CONSTRUCTIVE, Sequent
from wmodal.syntax import atom, bot, box, conj, dia, disj, imp, neg, parse

p, q, r = atom(1), atom(2), atom(3)


# ---------------------------------------------------------------------------
# prove

def test_wk_proves_k_box():
    res = prove(get_logic("WK"),
                Sequent((), (parse("[](p1->p2) -> ([]p1 -> []p2)"),),
                        CONSTRUCTIVE))
    assert res.proved
    assert check(get_logic("WK"), res.derivation)


def test_wmc_does_not_prove_dia_distribution():
    res = prove(get_logic("WMC"),
                Sequent((), (parse("<>(p1|p2) -> <>p1 | <>p2"),),
                        CONSTRUCTIVE))
    assert not res.proved
    assert res.derivation is None
    assert res.stats.nodes > 0


def test_wm_proves_dual_and():
    assert decide(get_logic("WM"), parse("~([]p1 & <>~p1)"))


def test_wk_does_not_prove_excluded_middle():
    assert not decide(get_logic("WK"), parse("p1 | ~p1"))


def test_classical_k_proves_dual_or():
    assert decide(get_logic("K"), parse("[]p1 | <>~p1"))


# ---------------------------------------------------------------------------
# decide

def test_wmn_proves_boxed_top():
    assert decide(get_logic("WMN"), parse("[]top"))


def test_wmn_proves_n_dia():
    assert decide(get_logic("WMN"), parse("~<>bot"))


def test_wm_does_not_prove_c_box():
    assert not decide(get_logic("WM"), parse("[]p1 & []p2 -> [](p1 & p2)"))


@pytest.mark.parametrize("name", sorted(n for n in LOGICS if n.startswith("W")))
def test_axiom_catalogue_is_derivable(name):
    logic = LOGICS[name]
    for ax in logic.axioms:
        assert decide(logic, instantiate_axiom(ax, p, q)), \
            "%s should derive %s" % (name, ax)


# ---------------------------------------------------------------------------
# prove_from

def test_prove_from_assumption():
    assert prove_from(get_logic("WM"), {p}, p).proved


def test_prove_from_k_premises():
    res = prove_from(get_logic("WK"), {box(p), box(imp(p, q))}, box(q))
    assert res.proved
    assert check(get_logic("WK"), res.derivation)


def test_prove_from_excluded_middle_assumption():
    em = disj(p, neg(p))
    assert prove_from(get_logic("WM"), {em}, em).proved


# ---------------------------------------------------------------------------
# check

def _tbox_derivation():
    # iT-box followed by init: |- []p1 => p1
    concl = Sequent((box(p),), (p,), CONSTRUCTIVE)
    leaf = Derivation("init", Sequent((box(p), p), (p,), CONSTRUCTIVE), (p,))
    return Derivation("iTbox", concl, (box(p),), (leaf,))


def test_check_hand_built_tbox():
    assert check(get_logic("WMT"), _tbox_derivation())


def test_check_rejects_tbox_outside_wmt():
    assert not check(get_logic("WM"), _tbox_derivation())


def test_check_rejects_non_closing_leaf():
    d = Derivation("iNbox", Sequent((), (box(imp(bot, bot)),), CONSTRUCTIVE))
    assert not check(get_logic("WMN"), d)


def test_derivation_heights():
    d = _tbox_derivation()
    assert d.children[0].height == 0
    assert d.height == 1
    for node in d.steps():
        assert node.height == 1 + max((c.height for c in node.children),
                                      default=-1)


def test_proved_results_pass_check_everywhere():
    rng = random.Random(7)
    for name in ("WM", "WK", "WMND", "WMT", "K", "MCD", "KT"):
        logic = LOGICS[name]
        for _ in range(10):
            seq = sampling.sample_derivable_sequent(logic, rng, size=4)
            res = prove(logic, seq)
            assert res.proved
            assert check(logic, res.derivation)
            assert res.derivation.conclusion == seq.normalized()


# ---------------------------------------------------------------------------
# budgets and errors

def test_budget_node_limit_raises():
    prover.clear_caches()
    try:
        goal = Sequent((), (parse("[](p1->p2) -> ([]p1 -> []p2)"),),
                       CONSTRUCTIVE)
        with pytest.raises(BudgetExceeded):
            prove(get_logic("WK"), goal, Budget(max_nodes=2))
    finally:
        prover.clear_caches()


def test_mode_mismatch_rejected():
    with pytest.raises(ValueError):
        prove(get_logic("K"), Sequent((), (p,), CONSTRUCTIVE))


# ---------------------------------------------------------------------------
# structural admissibility (small spot checks; the acceptance suite scales
# these to the full sampled matrix)

def test_weakening_contraction_cut_spot():
    from wmodal import suites
    assert suites.structural_suite(get_logic("WK"), 20, seed=3) == []


def test_disjunction_property_spot():
    from wmodal import suites
    assert suites.disjunction_suite(get_logic("WM"), 15, seed=5) == []
