import pytest
from hypothesis import given
from hypothesis import strategies as st

from wtg.fixtures import paw
from wtg.graph import EdgeKind, GraphError, Multigraph, colouring_count, load_label, validate_label

# paw edges: 0 = v1v2, 1 = v2v3, 2 = v2v4, 3 = v1v4


def test_component_count_examples():
    g = paw()
    assert g.component_count(0) == 4
    assert g.component_count(g.edge_mask()) == 1
    assert g.component_count(0b1101) == 2


def test_betti_examples():
    g = paw()
    assert g.betti1(0b0010) == 0
    assert g.betti1(0b1101) == 1
    assert Multigraph.from_pairs(1, [(0, 0)]).betti1() == 1


def test_classify_examples():
    g = paw()
    assert g.classify_edge(1) is EdgeKind.BRIDGE
    assert g.classify_edge(0) is EdgeKind.ORDINARY
    assert Multigraph.from_pairs(2, [(0, 1), (1, 1)]).classify_edge(1) is EdgeKind.LOOP


def test_minor_examples():
    g = paw()
    d = g.delete(1)
    assert (d.vertex_count, d.edge_count, d.component_count()) == (4, 3, 2)
    c = g.contract(1)
    assert (c.vertex_count, c.edge_count, c.betti1()) == (3, 3, 1)
    two_cycle = Multigraph.from_pairs(2, [(0, 1), (0, 1)]).contract(0)
    assert two_cycle.vertex_count == 1 and two_cycle.edge(1).is_loop


def test_contract_loop_is_an_error():
    with pytest.raises(GraphError, match="contract-loop"):
        Multigraph.from_pairs(1, [(0, 0)]).contract(0)


def test_colouring_examples():
    g = paw()
    assert colouring_count(g, 0, 2) == 16
    assert colouring_count(g, g.edge_mask(), 3) == 3
    assert colouring_count(g, 0b1101, 2) == 4


@st.composite
def graphs(draw):
    v = draw(st.integers(1, 4))
    pairs = draw(st.lists(st.tuples(st.integers(0, v - 1), st.integers(0, v - 1)), max_size=6))
    return Multigraph.from_pairs(v, pairs)


@given(graphs(), st.data())
def test_colouring_oracle(g, data):
    A = data.draw(st.integers(0, (1 << g.edge_count) - 1))
    lam = data.draw(st.integers(1, 3))
    assert colouring_count(g, A, lam) == lam ** g.component_count(A)


@given(graphs())
def test_edge_kinds_are_exhaustive(g):
    for e in g.edge_ids():
        kind = g.classify_edge(e)
        if kind is EdgeKind.BRIDGE:
            assert g.delete(e).component_count() == g.component_count() + 1
        elif kind is EdgeKind.ORDINARY:
            assert g.delete(e).component_count() == g.component_count()
            assert g.contract(e).vertex_count == g.vertex_count - 1


def test_json_round_trip_and_labels():
    g = paw()
    assert Multigraph.from_json(g.to_json()) == g
    assert validate_label([4, 1, 2, 3], 4) == (4, 1, 2, 3)
    assert load_label("[4,1,2,3]", 4) == (4, 1, 2, 3)
    for bad in ([1, 1, 2, 3], [1, 2, 3], [0, 1, 2, 3]):
        with pytest.raises(GraphError):
            validate_label(bad, 4)
    with pytest.raises(GraphError):
        Multigraph.from_json({"vertices": 2, "edges": [[1, 3]]})
