import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wtg.algebra import BIG_X, BIG_Y, LAM, X_, Y_, MVPoly
from wtg.fixtures import paw, paw_label, random_labels
from wtg.graph import Multigraph
from wtg.matroid import RankOracle
from wtg.polynomials import (
    HarmonicityError,
    TGParams,
    chromatic_direct,
    chromatic_recursive,
    classical_chromatic,
    classical_tutte,
    tg_p,
    tg_phi,
    tg_phi_subset_form,
    tutte_direct,
    tutte_recursive,
    verify_chromatic_tutte,
    verify_tg_recipe,
)
from wtg.weights import WeightFn, harmonic_basis, hom_basis

LOOP = Multigraph.from_pairs(1, [(0, 0)])
BRIDGE = Multigraph.from_pairs(2, [(0, 1)])
TRIANGLE = Multigraph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])


def test_chromatic_examples():
    g, s = paw(), paw_label()
    assert chromatic_direct(g, s, WeightFn.indicator(4, [1])) == LAM ** 4 - 3 * LAM ** 3 + 2 * LAM ** 2
    assert chromatic_direct(g, s, WeightFn.indicator(4, [2])) == LAM ** 4 - 3 * LAM ** 3 + 3 * LAM ** 2 - LAM
    edgeless = Multigraph(3, ())
    assert chromatic_direct(edgeless, (), WeightFn(0, 0, {0: 5})) == LAM ** 3 * 5
    f = WeightFn.indicator(1, [1])
    assert chromatic_direct(LOOP, (1,), f) == LAM
    assert chromatic_direct(BRIDGE, (1,), f) == LAM ** 2


def test_tutte_examples():
    f = WeightFn.indicator(1, [1])
    assert tutte_direct(RankOracle.graphic(LOOP), (1,), f) == Y_ - 1
    assert tutte_direct(RankOracle.graphic(BRIDGE), (1,), f) == MVPoly.one()
    assert tutte_direct(RankOracle.graphic(TRIANGLE), (1, 2, 3), WeightFn.ones(3)) == X_ ** 2 + X_ + Y_
    m, s = RankOracle.graphic(paw()), paw_label()
    assert tutte_direct(m, s, WeightFn.indicator(4, [1])) == X_ ** 2 + X_ + Y_
    assert tutte_direct(m, s, WeightFn.indicator(4, [2])) == X_ ** 2 + X_ * Y_


def test_classical_specializations():
    g = paw()
    ones = WeightFn.ones(4)
    assert chromatic_direct(g, (1, 2, 3, 4), ones) == classical_chromatic(g)
    assert classical_chromatic(g) == LAM * (LAM - 1) ** 2 * (LAM - 2)
    assert tutte_direct(RankOracle.graphic(g), (1, 2, 3, 4), ones) == classical_tutte(RankOracle.graphic(g))


def test_chromatic_tutte_examples():
    assert verify_chromatic_tutte(paw(), paw_label(), WeightFn.from_vector(4, 1, [1, -1, 0, 0]))
    with pytest.raises(HarmonicityError, match="harmonicity required"):
        verify_chromatic_tutte(paw(), paw_label(), WeightFn.indicator(4, [1]))


def test_tg_specializes_to_chromatic():
    g, s = paw(), paw_label()
    for f in harmonic_basis(4, 1):
        phi = tg_phi(g, s, f, TGParams(1, -1))
        assert phi.substitute({"X": LAM - 1, "Y": 0}) * LAM == chromatic_direct(g, s, f)
    assert tg_phi(Multigraph(2, ()), (), WeightFn.ones(0), TGParams(2, 3)) == MVPoly.one()


def test_tg_params_must_be_nonzero():
    with pytest.raises(ValueError):
        TGParams(0, 1)


def test_tg_p_mirrors_phi_for_harmonic_weights():
    g, s = paw(), paw_label()
    p = TGParams(2, 3)
    for d in range(5):
        for f in harmonic_basis(4, d):
            assert tg_p(g, s, f, p) == tg_phi(g, s, f, p).scale((-1) ** d)


def test_tg_literal_bridge_rule_differs_on_a_bridge():
    f = WeightFn.indicator(1, [1])
    p = TGParams(2, 3)
    recipe = tg_phi(BRIDGE, (1,), f, p)
    literal = tg_phi(BRIDGE, (1,), f, p, bridge_rule="literal")
    assert recipe == BIG_X - 3
    assert literal == (BIG_X - 3) * (BIG_Y - 2) / 2


@st.composite
def instances(draw):
    v = draw(st.integers(1, 4))
    pairs = draw(st.lists(st.tuples(st.integers(0, v - 1), st.integers(0, v - 1)), max_size=5))
    g = Multigraph.from_pairs(v, pairs)
    n = g.edge_count
    label = tuple(draw(st.permutations(range(1, n + 1))))
    d = draw(st.integers(0, n))
    size = len(hom_basis(n, d))
    f = WeightFn.from_vector(n, d, draw(st.lists(st.integers(-3, 3), min_size=size, max_size=size)))
    return g, label, f


@given(instances())
@settings(max_examples=60, deadline=None)
def test_recursions_equal_subset_sums(inst):
    g, s, f = inst
    assert chromatic_recursive(g, s, f) == chromatic_direct(g, s, f)
    m = RankOracle.graphic(g)
    assert tutte_recursive(m, s, f) == tutte_direct(m, s, f)


@given(instances(), st.integers(0, 10 ** 6))
@settings(max_examples=60, deadline=None)
def test_tg_subset_form_for_every_weight(inst, seed):
    g, s, f = inst
    rng = random.Random(seed)
    p = TGParams(rng.choice([1, 2, -3]), rng.choice([1, -1, 5]))
    assert tg_phi(g, s, f, p) == tg_phi_subset_form(g, s, f, p)
    assert tg_phi(g, s, f, p, pivot=lambda ids: max(ids)) == tg_phi(g, s, f, p)


def test_tg_recipe_on_paw():
    g = paw()
    for s in random_labels(4, 3, seed=1):
        for d in range(5):
            for f in harmonic_basis(4, d):
                assert verify_tg_recipe(g, s, f, TGParams(1, -1))
                assert verify_tg_recipe(g, s, f, TGParams(3, 7))


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        chromatic_direct(paw(), paw_label(), WeightFn.ones(3))
    with pytest.raises(ValueError):
        tutte_direct(RankOracle.graphic(paw()), (1, 1, 2, 3), WeightFn.ones(4))
