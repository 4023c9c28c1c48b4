"""Craig interpolation: case table, certificates, variable condition."""

import itertools
import random

import pytest

from wmodal import interpolation, prover, sampling
from wmodal.interpolation import (CertificateError, NotATheoremError,
                                  Partition, craig, interpolate_derivation,
                                  simplify)
from wmodal.logics import LOGICS, get_logic
from wmodal.prover import decide, prove
from wmodal.sequents import CONSTRUCTIVE, Sequent
from wmodal.syntax import (atom, bot, box, conj, dia, disj, imp, parse, top,
                           var_set, var_set_all)

p, q, r = atom(1), atom(2), atom(3)

W_LOGICS = sorted(n for n in LOGICS if n.startswith("W"))


def _contract_ok(res, left, right_and_suc):
    return var_set_all([res.interpolant]) <= (
        var_set_all(left) & var_set_all(right_and_suc))


# ---------------------------------------------------------------------------
# interpolate_derivation

def test_split_conjunction_goal():
    wm = get_logic("WM")
    d = prove(wm, Sequent((p, q), (conj(p, q),), CONSTRUCTIVE)).derivation
    res = interpolate_derivation(wm, d, Partition((p,), (q,)))
    assert simplify(res.interpolant) is p
    assert _contract_ok(res, [p], [q, conj(p, q)])


def test_empty_left_part_gives_top_strength():
    wm = get_logic("WM")
    seq = Sequent((p, q), (conj(p, q),), CONSTRUCTIVE)
    d = prove(wm, seq).derivation
    res = interpolate_derivation(wm, d, Partition((), (p, q)))
    # the left certificate derives the interpolant from nothing
    assert decide(wm, res.interpolant)


def test_bot_on_the_left():
    wm = get_logic("WM")
    d = prove(wm, Sequent((bot,), (q,), CONSTRUCTIVE)).derivation
    res = interpolate_derivation(wm, d, Partition((bot,), ()))
    assert res.interpolant is bot


def test_partition_must_split_antecedent():
    wm = get_logic("WM")
    d = prove(wm, Sequent((p,), (p,), CONSTRUCTIVE)).derivation
    with pytest.raises(ValueError):
        interpolate_derivation(wm, d, Partition((q,), ()))


def test_classical_logic_rejected():
    k = get_logic("K")
    with pytest.raises(ValueError):
        craig(k, p, p)


# ---------------------------------------------------------------------------
# craig

def test_craig_wk_conjunction_disjunction():
    res = craig(get_logic("WK"), conj(p, q), disj(p, r))
    assert var_set(res.interpolant) <= {bot, p}


def test_craig_identity():
    res = craig(get_logic("WM"), p, p)
    assert var_set(res.interpolant) <= {bot, p}


def test_craig_wmt_box_to_dia():
    res = craig(get_logic("WMT"), box(p), dia(p))
    assert var_set(res.interpolant) <= {bot, p}


def test_craig_bot_implies_anything():
    res = craig(get_logic("WM"), bot, q)
    assert res.interpolant is bot


def test_craig_modal_k_example():
    res = craig(get_logic("WK"), conj(box(p), box(imp(p, q))), box(q))
    assert var_set(res.interpolant) <= {bot, p, q}
    assert decide(get_logic("WK"),
                  imp(conj(box(p), box(imp(p, q))), res.interpolant))


def test_craig_not_a_theorem():
    with pytest.raises(NotATheoremError):
        craig(get_logic("WM"), p, q)


def test_certificates_pass_check():
    wk = get_logic("WK")
    res = craig(wk, conj(p, q), disj(p, r))
    assert prover.check(wk, res.left_certificate)
    assert prover.check(wk, res.right_certificate)


# ---------------------------------------------------------------------------
# partition exhaustiveness over random derivable sequents

@pytest.mark.parametrize("name", W_LOGICS)
def test_all_partitions_interpolate(name):
    logic = LOGICS[name]
    rng = random.Random(hash(name) & 0xFFFF)
    for _ in range(8):
        seq = sampling.sample_derivable_sequent(logic, rng, size=4,
                                                max_side=4)
        d = prove(logic, seq).derivation
        ant = d.conclusion.ant
        for k in range(len(ant) + 1):
            for left in itertools.combinations(ant, k):
                right = tuple(f for f in ant if f not in left)
                res = interpolate_derivation(logic, d, Partition(left, right))
                assert _contract_ok(res, left, right + d.conclusion.suc)


# ---------------------------------------------------------------------------
# simplify

def test_simplify_absorbs_constants():
    assert simplify(conj(top, p)) is p
    assert simplify(disj(bot, p)) is p
    assert simplify(imp(p, top)) is top
    assert simplify(box(conj(p, top))) is box(p)


def test_simplify_preserves_derivability():
    wm = get_logic("WM")
    for text in ("p1 & top", "(bot | p1) -> p1", "[]~(bot & p1) -> []top"):
        f = parse(text)
        assert decide(wm, f) == decide(wm, simplify(f))
