import pytest
from hypothesis import given, settings, strategies as st

from crnet.egraph import (
    RateAssignment,
    is_reversible,
    is_source_only,
    is_weakly_reversible,
    split_edge,
    strongly_connected_components,
    validate,
)
from crnet.equivalence import dynamics_included
from crnet.errors import (
    DimensionMismatch,
    DuplicateNode,
    EmptyNetwork,
    InvalidRate,
    IsolatedNode,
    MergeableParallelEdges,
    NegativeCoordinate,
    SelfLoopEdge,
    SplitConeViolation,
)
from crnet.parser import serialize_egraph, parse, to_egraph

from conftest import F, egraphs, load, net


def test_validate_examples():
    G = validate([(1, 0), (0, 1)], [(0, 1), (1, 0)], 2)
    assert G.sources == (F(1, 0), F(0, 1))
    with pytest.raises(SelfLoopEdge):
        validate([(1, 0)], [(0, 0)], 2)
    with pytest.raises(DuplicateNode):
        validate([(1, 0), (1, 0)], [(0, 1)], 2)


def test_validate_errors():
    with pytest.raises(IsolatedNode):
        validate([(1, 0), (0, 1), (2, 2)], [(0, 1)], 2)
    with pytest.raises(NegativeCoordinate):
        validate([(-1, 0), (0, 1)], [(0, 1)], 2)
    with pytest.raises(DimensionMismatch):
        validate([(1, 0), (0, 1, 0)], [(0, 1)], 2)
    with pytest.raises(MergeableParallelEdges):
        validate([(1, 0), (0, 1)], [(0, 1), (0, 1)], 2)
    with pytest.raises(EmptyNetwork):
        validate([], [], 2)


def test_fractional_coordinates_allowed():
    G = net((F("1/2", 0), F(0, "3/2")))
    assert G.reaction_vector(0) == F("-1/2", "3/2")


def test_rates_positive():
    with pytest.raises(InvalidRate):
        RateAssignment((1, 0))
    assert RateAssignment((1, "1/2")).scaled(2).rates == F(2, 1)


def test_reversibility_examples():
    G = load("system1")[0]
    assert is_reversible(G) and is_weakly_reversible(G) and is_source_only(G)
    R = load("wr_not_reversible")[0]
    assert not is_reversible(R)
    assert is_weakly_reversible(R)
    single = net((F(1), F(2)))
    assert not is_reversible(single)
    assert not is_weakly_reversible(load("inflow_dimer")[0])


def test_source_only_examples():
    assert is_source_only(load("ex12")[0])
    assert not is_source_only(load("ex1")[0])


def test_split_edge_examples():
    ex1 = load("ex1")[0]
    e = ex1.reactions().index((F(1, 1), F(2, 2)))
    G = split_edge(ex1, e, [F(3, 0), F(0, 3)])
    assert set(G.reactions()) == set(load("ex12")[0].reactions())
    assert dynamics_included(ex1, G).holds
    one = net((F(1), F(2)))
    assert split_edge(one, 0, [F(2)]).reactions() == one.reactions()
    with pytest.raises(SplitConeViolation):
        split_edge(net((F(1, 0), F(0, 1))), 0, [F(1, 1)])


def test_scc_labels():
    comp = strongly_connected_components(5, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 2), (4, 4)])
    assert comp[0] == comp[1]
    assert comp[2] == comp[3]
    assert len({comp[0], comp[2], comp[4]}) == 3


def _reachable(G, a, b):
    seen, todo = {a}, [a]
    while todo:
        x = todo.pop()
        for e in G.edges:
            if e.source == x and e.target not in seen:
                seen.add(e.target)
                todo.append(e.target)
    return b in seen


@settings(max_examples=150, deadline=None)
@given(egraphs())
def test_weak_reversibility_against_reachability(G):
    expected = all(_reachable(G, e.target, e.source) for e in G.edges)
    assert is_weakly_reversible(G) == expected


@settings(max_examples=150, deadline=None)
@given(egraphs())
def test_structural_implications(G):
    if is_reversible(G):
        assert is_weakly_reversible(G)
    if is_weakly_reversible(G):
        assert is_source_only(G)


@settings(max_examples=100, deadline=None)
@given(egraphs())
def test_serialize_roundtrip(G):
    H, _ = to_egraph(parse(serialize_egraph(G)))
    assert H == G


@settings(max_examples=100, deadline=None)
@given(egraphs(dims=(2,)), st.data())
def test_split_includes_dynamics(G, data):
    e = data.draw(st.integers(0, len(G.edges) - 1))
    s, v = G.source(e), G.reaction_vector(e)
    a = data.draw(st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
    # t1 = s + v + a and t2 = s + v - a give v = (u1 + u2) / 2
    t1 = tuple(x + y + z for x, y, z in zip(s, v, a))
    t2 = tuple(x + y - z for x, y, z in zip(s, v, a))
    if min(t1 + t2) < 0 or F(*t1) == s or F(*t2) == s:
        return
    H = split_edge(G, e, [t1, t2])
    assert dynamics_included(G, H).holds
