"""Neighbourhood models: forcing, conditions, generation, countermodels."""

import random

import pytest

from wmodal import prover, sampling, semantics
from wmodal.logics import LOGICS, get_logic
from wmodal.semantics import (ConstructiveNeighModel, NeighModel,
                              check_conditions, conditions_hold,
                              enumerate_countermodel, extension, forces,
                              model_from_json, model_to_json, random_model,
                              valid_in_model)
from wmodal.syntax import atom, bot, box, dia, neg, parse, top

p = atom(1)

EMPTY_CLASSICAL = NeighModel(1, ((),), ())
EMPTY_CNM = ConstructiveNeighModel(1, (1,), ((),), ())


# ---------------------------------------------------------------------------
# forcing

def test_empty_neighbourhoods_force_dia_bot():
    assert forces(EMPTY_CLASSICAL, 0, dia(bot))
    assert forces(EMPTY_CNM, 0, dia(bot))


def test_empty_neighbourhoods_refute_box_top():
    assert not forces(EMPTY_CLASSICAL, 0, box(top))
    assert not forces(EMPTY_CNM, 0, box(top))


def test_singleton_neighbourhood_forces_box_p():
    classical = NeighModel(1, ((1,),), ((1, 1),))
    constructive = ConstructiveNeighModel(1, (1,), ((1,),), ((1, 1),))
    assert forces(classical, 0, box(p))
    assert forces(constructive, 0, box(p))


def test_constructive_implication_quantifies_over_successors():
    # w0 <= w1; p holds only at w1, q nowhere: p -> q fails at w0 because
    # the successor w1 refutes it locally.
    m = ConstructiveNeighModel(2, (3, 2), ((), ()), ((1, 2),))
    assert not forces(m, 0, parse("p1 -> p2"))
    assert forces(m, 0, neg(p)) is False  # p is forced at the successor


def test_world_out_of_range():
    with pytest.raises(ValueError):
        forces(EMPTY_CLASSICAL, 1, p)


# ---------------------------------------------------------------------------
# conditions

def test_condition_n_fails_on_empty_family():
    rep = check_conditions(EMPTY_CNM, get_logic("WMN"))
    assert rep.status["N"] is False
    assert rep.witnesses["N"] == (0,)
    assert not rep.ok


def test_condition_c_fails_on_missing_intersection():
    m = NeighModel(2, ((1, 2), ()), ())
    assert not conditions_hold(m, ["C"])
    holds, wit = semantics._check_condition(m, "C")
    assert not holds and wit is not None


def test_condition_t_holds_when_worlds_in_their_neighbourhoods():
    m = NeighModel(2, ((1, 3), (2,)), ())
    assert conditions_hold(m, ["T"])


def test_condition_d_includes_equal_pairs():
    # {a} with a nonempty intersects itself; the empty neighbourhood fails D
    assert conditions_hold(NeighModel(1, ((1,),), ()), ["D"])
    assert not conditions_hold(NeighModel(1, ((0,),), ()), ["D"])


# ---------------------------------------------------------------------------
# validity

def test_top_valid_everywhere():
    assert valid_in_model(EMPTY_CLASSICAL, top)
    assert valid_in_model(EMPTY_CNM, top)


def test_n_dia_fails_in_empty_model():
    assert not valid_in_model(EMPTY_CNM, neg(dia(bot)))


def test_box_top_valid_under_condition_n():
    m = random_model(get_logic("WMN"), 4, seed=11)
    assert valid_in_model(m, box(top))


# ---------------------------------------------------------------------------
# random models

@pytest.mark.parametrize("name",
                         ["WM", "WMN", "WKT", "WMND", "M", "K", "MD", "KT"])
def test_random_model_satisfies_conditions(name):
    logic = LOGICS[name]
    for seed in range(10):
        m = random_model(logic, 4, seed)
        assert check_conditions(m, logic).ok
        if isinstance(m, ConstructiveNeighModel):
            m.validate()
        else:
            assert logic.mode == "classical"


def test_random_model_single_world_wm():
    m = random_model(get_logic("WM"), 1, seed=0)
    assert m.n == 1


# ---------------------------------------------------------------------------
# countermodel enumeration

def test_countermodel_wm_n_dia():
    found = enumerate_countermodel(get_logic("WM"), neg(dia(bot)), 1)
    assert found is not None
    model, world = found
    assert model.n == 1 and model.neigh[0] == ()
    assert not forces(model, world, neg(dia(bot)))


def test_countermodel_wk_dia_distribution():
    wk = get_logic("WK")
    f = parse("<>(p1|p2) -> <>p1 | <>p2")
    found = enumerate_countermodel(wk, f, 3)
    assert found is not None
    model, world = found
    assert check_conditions(model, wk).ok
    model.validate()
    assert not forces(model, world, f)
    # soundness contrapositive: a witness means the prover must refuse it
    assert not prover.decide(wk, f)


def test_countermodel_none_for_theorems():
    wk = get_logic("WK")
    f = parse("[](p1->p2) -> ([]p1 -> []p2)")
    assert enumerate_countermodel(wk, f, 2) is None
    wm = get_logic("WM")
    assert enumerate_countermodel(wm, parse("p1 -> p1"), 2) is None


def test_countermodel_wm_refutes_excluded_middle():
    wm = get_logic("WM")
    f = parse("p1 | ~p1")
    found = enumerate_countermodel(wm, f, 2)
    assert found is not None
    model, world = found
    assert not forces(model, world, f)


# ---------------------------------------------------------------------------
# serialization

def test_json_roundtrip_classical():
    m = random_model(get_logic("MD"), 4, seed=3)
    assert model_from_json(model_to_json(m)) == m


def test_json_roundtrip_constructive():
    m = random_model(get_logic("WKT"), 4, seed=4)
    assert model_from_json(model_to_json(m)) == m


def test_json_roundtrip_bit_exact_text():
    m = random_model(get_logic("WM"), 3, seed=5)
    text = model_to_json(m)
    assert model_to_json(model_from_json(text)) == text


# ---------------------------------------------------------------------------
# hereditariness

def test_forcing_hereditary_along_order():
    rng = random.Random(13)
    for i in range(150):
        logic = get_logic(rng.choice(["WM", "WMN", "WK", "WKT", "WMND"]))
        m = random_model(logic, 4, rng.getrandbits(32))
        f = sampling.random_formula(rng, rng.randint(1, 6))
        ext = extension(m, f)
        for w in range(m.n):
            if ext >> w & 1:
                assert not m.succ[w] & ~ext, \
                    "forcing not hereditary for %s" % f


# ---------------------------------------------------------------------------
# model invariants

def test_validate_rejects_irreflexive_order():
    with pytest.raises(ValueError):
        ConstructiveNeighModel(2, (1, 1), ((), ()), ()).validate()


def test_validate_rejects_non_hereditary_valuation():
    with pytest.raises(ValueError):
        ConstructiveNeighModel(2, (3, 2), ((), ()), ((1, 1),)).validate()
