from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from crnet.egraph import EGraph
from crnet.parser import parse, to_egraph

NETWORKS = Path(__file__).resolve().parent.parent / "networks"


def load(name, species=None):
    doc = parse((NETWORKS / f"{name}.crn").read_text())
    return to_egraph(doc, species)


def net(*reactions, dim=None):
    """``net(((1, 0), (0, 1)), ...)`` with integer or Fraction coordinates."""
    return EGraph.from_reactions(list(reactions), dim)


@pytest.fixture
def networks():
    return load


def F(*xs):
    return tuple(Fraction(x) for x in xs)


small_int = st.integers(min_value=-3, max_value=3)


def vectors(d, lo=-3, hi=3):
    return st.tuples(*[st.integers(min_value=lo, max_value=hi)] * d).map(lambda t: F(*t))


def nonzero_vectors(d, lo=-3, hi=3):
    return vectors(d, lo, hi).filter(lambda v: any(v))


@st.composite
def egraphs(draw, dims=(1, 2, 3), max_nodes=5, max_coord=3):
    """Small valid networks: distinct nonnegative nodes, no self loops, every node used."""
    d = draw(st.sampled_from(dims))
    pts = draw(
        st.lists(vectors(d, 0, max_coord), min_size=2, max_size=max_nodes, unique=True)
    )
    pairs = [(a, b) for a in pts for b in pts if a != b]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=8, unique=True))
    return EGraph.from_reactions(chosen, d)


@st.composite
def rates_for(draw, G):
    ks = draw(
        st.lists(
            st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=10),
            min_size=len(G.edges),
            max_size=len(G.edges),
        )
    )
    return tuple(k if k > 0 else Fraction(1) for k in ks)
