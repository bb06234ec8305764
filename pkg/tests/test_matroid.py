import pytest
from hypothesis import given
from hypothesis import strategies as st

from wtg.fixtures import matroid_files, paw
from wtg.graph import Multigraph
from wtg.invariants import matroid_pair
from wtg.matroid import ElementKind, FpMatrix, MatroidError, RankOracle


def test_graphic_rank_examples():
    m = RankOracle.graphic(paw())
    assert m.rank() == 3
    assert m.rank(0) == 0
    assert RankOracle.graphic(Multigraph.from_pairs(1, [(0, 0)])).rank() == 0


def test_linear_rank_examples():
    m1, _ = matroid_pair()
    assert m1.rank() == 3
    assert m1.rank(1 << 3) == 1
    assert m1.rank(0) == 0
    assert RankOracle.linear(FpMatrix(2, ((0, 1),))).classify(0) is ElementKind.LOOP


def test_classify_examples():
    m = RankOracle.graphic(paw())
    assert m.classify(1) is ElementKind.COLOOP
    assert m.classify(0) is ElementKind.ORDINARY


def test_non_prime_field_rejected():
    with pytest.raises(Exception):
        FpMatrix(4, ((1, 0),))


@st.composite
def graphs(draw):
    v = draw(st.integers(1, 4))
    pairs = draw(st.lists(st.tuples(st.integers(0, v - 1), st.integers(0, v - 1)), min_size=1, max_size=6))
    return Multigraph.from_pairs(v, pairs)


@given(graphs(), st.data())
def test_minors_match_graph_minors(g, data):
    e = data.draw(st.sampled_from(g.edge_ids()))
    m = RankOracle.graphic(g)
    rest = g.edge_mask() & ~(1 << e)
    subsets = [A for A in range(1 << g.edge_count) if A & ~rest == 0]
    deleted = g.delete(e)
    assert all(m.delete(e).rank(A) == deleted.vertex_count - deleted.component_count(A) for A in subsets)
    if not g.edge(e).is_loop:
        contracted = g.contract(e)
        assert all(m.contract(e).rank(A) == contracted.vertex_count - contracted.component_count(A) for A in subsets)
    else:
        assert all(m.contract(e).rank(A) == m.rank(A) for A in subsets)


@given(graphs())
def test_dual_is_an_involution(g):
    m = RankOracle.graphic(g)
    dd = RankOracle.from_rank(m.size, m.dual().rank).dual()
    assert all(dd.rank(A) == m.rank(A) for A in range(1 << m.size))
    for e in m.elements():
        if m.classify(e) is ElementKind.LOOP:
            assert m.dual().classify(e) is ElementKind.COLOOP


def test_json_round_trip():
    for name, m in matroid_files().items():
        again = RankOracle.from_json(m.to_json())
        assert all(again.rank(A) == m.rank(A) for A in range(1 << m.size)), name
    with pytest.raises(MatroidError):
        RankOracle.from_json({"kind": "nonsense"})
    with pytest.raises(MatroidError):
        RankOracle.uniform(3, 2)
