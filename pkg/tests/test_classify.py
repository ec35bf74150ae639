from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from crnet.classify import (
    check_violation,
    classify,
    endotactic_2d_sweep_oracle,
    extremal_sources,
    extremal_subnetwork,
    is_consistent,
    is_endotactic,
    is_extremally_weakly_reversible,
    is_strongly_endotactic,
)
from crnet.egraph import EGraph
from crnet.errors import WrongDimension
from crnet.linalg import scale

from conftest import F, egraphs, load, net


def test_consistency_examples():
    ok, w = is_consistent(net((F(1), F(0)), (F(1), F(2))))
    assert ok and w.lambdas[0] == w.lambdas[1]
    ok, w = is_consistent(net((F(1), F(2))))
    assert not ok and w.direction[0] < 0
    assert is_consistent(load("gbig")[0])[0]


def test_endotactic_examples():
    assert is_endotactic(load("system1")[0])[0]
    G = load("system2", ["X1", "X2"])[0]
    ok, v = is_endotactic(G)
    assert not ok
    assert check_violation(G, v.w, v.edge)
    # the direction used by hand in the sweep picture
    assert any(check_violation(G, F(-1, -1), e) for e in range(len(G.edges)))
    assert not is_endotactic(load("gbig")[0])[0]


def test_strongly_endotactic_examples():
    assert is_strongly_endotactic(load("ex1")[0])[0]
    ex3 = load("ex3")[0]
    assert is_endotactic(ex3)[0]
    ok, v = is_strongly_endotactic(ex3)
    assert not ok and check_violation(ex3, v.w, v.edge, strong=True)
    assert is_strongly_endotactic(load("system1")[0])[0]


def test_extremal_examples():
    ex1 = load("ex1")[0]
    sub = extremal_subnetwork(ex1)
    assert set(sub.nodes) == {F(3, 0), F(0, 3), F(0, 0)}
    assert len(sub.edges) == 3
    assert is_extremally_weakly_reversible(ex1)
    ex3 = load("ex3")[0]
    assert extremal_subnetwork(ex3) == ex3
    assert not is_extremally_weakly_reversible(ex3)
    s1 = load("system1")[0]
    assert extremal_subnetwork(s1) == s1 and is_extremally_weakly_reversible(s1)


def test_sweep_oracle_examples():
    assert endotactic_2d_sweep_oracle(load("system1")[0])
    assert not endotactic_2d_sweep_oracle(load("system2", ["X1", "X2"])[0])
    assert endotactic_2d_sweep_oracle(load("ex3")[0])
    with pytest.raises(WrongDimension):
        endotactic_2d_sweep_oracle(load("inflow_dimer")[0])


def test_report_flags():
    rep = classify(load("ex1")[0])
    assert rep.flags() == {
        "reversible": False,
        "weakly_reversible": False,
        "source_only": False,
        "consistent": True,
        "endotactic": True,
        "strongly_endotactic": True,
        "extremally_weakly_reversible": True,
    }
    assert rep.witnesses["source_only"] == F(2, 2)


def test_one_dimensional_cases():
    # X -> 2X pushes outward; with a single source nothing can counter X -> 0
    assert not is_endotactic(net((F(1), F(2))))[0]
    assert not is_endotactic(net((F(1), F(0)), (F(1), F(2))))[0]
    assert is_endotactic(load("inflow_dimer")[0])[0]
    assert is_endotactic(load("dimer_exchange")[0])[0]
    assert not is_endotactic(load("x_to_2x")[0])[0]


def _random_direction_violation(G, strong, rng, n=300):
    for _ in range(n):
        w = F(*(rng.randint(-6, 6) for _ in range(G.dim)))
        if not any(w):
            continue
        for e in range(len(G.edges)):
            if check_violation(G, w, e, strong):
                return w, e
    return None


@settings(max_examples=120, deadline=None)
@given(egraphs(), st.randoms(use_true_random=False))
def test_no_missed_violations(G, rng):
    """Directions sampled at random never expose a violation the cells missed."""
    for strong, fn in ((False, is_endotactic), (True, is_strongly_endotactic)):
        ok, v = fn(G)
        if ok:
            assert _random_direction_violation(G, strong, rng) is None
        else:
            assert check_violation(G, v.w, v.edge, strong)


@settings(max_examples=200, deadline=None)
@given(egraphs(dims=(2,)))
def test_agrees_with_sweep(G):
    assert is_endotactic(G)[0] == endotactic_2d_sweep_oracle(G)


@settings(max_examples=100, deadline=None)
@given(egraphs())
def test_report_witnesses_recheck(G):
    rep = classify(G)
    w = rep.witnesses
    assert w["consistent"].check(F(*[0] * G.dim), list(G.reaction_vectors))
    for key, strong in (("endotactic", False), ("strongly_endotactic", True)):
        if not getattr(rep, key):
            assert check_violation(G, w[key].w, w[key].edge, strong)
    if not rep.reversible:
        s, t = G.reactions()[w["reversible"]]
        assert not G.has_reaction(t, s)
    if not rep.source_only:
        assert w["source_only"] not in G.sources and w["source_only"] in G.nodes


@settings(max_examples=100, deadline=None)
@given(egraphs(), st.randoms(use_true_random=False), st.integers(1, 4), st.integers(1, 3))
def test_invariant_under_relabeling_and_scaling(G, rng, p, q):
    reactions = G.reactions()
    rng.shuffle(reactions)
    H = EGraph.from_reactions(reactions, G.dim)
    c = Fraction(p, q)
    S = EGraph.from_reactions([(scale(c, s), scale(c, t)) for s, t in G.reactions()], G.dim)
    flags = classify(G).flags()
    assert classify(H).flags() == flags
    assert classify(S).flags() == flags


@settings(max_examples=100, deadline=None)
@given(egraphs())
def test_extremal_subnetwork_idempotent(G):
    E = extremal_subnetwork(G)
    assert extremal_subnetwork(E) == E
    assert set(extremal_sources(E)) == set(E.sources)


@settings(max_examples=150, deadline=None)
@given(egraphs())
def test_implication_chain(G):
    r = classify(G)
    assert not r.reversible or r.weakly_reversible
    assert not r.weakly_reversible or r.endotactic
    assert not r.strongly_endotactic or r.endotactic
    assert not r.endotactic or r.consistent
