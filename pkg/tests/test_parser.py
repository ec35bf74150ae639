from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from crnet.classify import classify
from crnet.errors import (
    CRNSyntaxError,
    DuplicateSpeciesDeclaration,
    EmptyNetwork,
    InvalidRate,
    MergeableParallelEdges,
    MissingRate,
    NegativeCoefficient,
)
from crnet.parser import (
    default_species,
    document_from_egraph,
    parse,
    serialize,
    serialize_egraph,
    to_egraph,
)

from conftest import F, NETWORKS, egraphs, load


def test_reversible_with_rates():
    doc = parse("X1 <-> X2 , k = 1, 1")
    G, K = to_egraph(doc)
    assert G.reactions() == [(F(1, 0), F(0, 1)), (F(0, 1), F(1, 0))]
    assert K.rates == F(1, 1)


def test_empty_complex_and_rational_rate():
    G, K = to_egraph(parse("0 -> 2 X , k = 1/2"))
    assert G.reactions() == [(F(0), F(2))]
    assert K.rates == (Fraction(1, 2),)


def test_syntax_error_position():
    with pytest.raises(CRNSyntaxError) as exc:
        parse("X1 + -> X2")
    assert exc.value.line == 1 and exc.value.column == 6


def test_errors():
    with pytest.raises(NegativeCoefficient):
        parse("-1 X -> 0")
    with pytest.raises(MissingRate):
        parse("X -> 0", require_rates=True)
    with pytest.raises(MissingRate):
        parse("X <-> 0 , k = 1")
    with pytest.raises(InvalidRate):
        parse("X -> 0 , k = 0")
    with pytest.raises(CRNSyntaxError):
        parse("X -> 0 , k = 1, 2")
    with pytest.raises(DuplicateSpeciesDeclaration):
        parse("species: A B A")
    with pytest.raises(EmptyNetwork):
        to_egraph(parse("# nothing\n"))
    with pytest.raises(MergeableParallelEdges):
        to_egraph(parse("A -> B\nA -> B"))


def test_parallel_merge_adds_rates():
    G, K = to_egraph(parse("A -> B , k = 1\nA -> B , k = 1/2"), merge_parallel=True)
    assert len(G.edges) == 1 and K.rates == (Fraction(3, 2),)


def test_system2_document():
    G, K = load("system2")
    assert len(G.nodes) == 4 and len(G.edges) == 3
    assert K is not None


def test_ex3_document():
    G, _ = load("ex3")
    assert len(G.sources) == 6 and len(G.nodes) == 6
    assert len(G.edges) == 6


def test_repeated_complex_is_one_node():
    G, _ = to_egraph(parse("2 X1 + 3 X2 -> X1\nX1 -> 2 X1 + 3 X2"))
    assert len(G.nodes) == 2


def test_comments_semicolons_and_header():
    doc = parse("species: B A  # header\nA -> B; B -> 0\n\n")
    assert doc.species_order == ("B", "A")
    G, _ = to_egraph(doc)
    assert G.reactions() == [(F(0, 1), F(1, 0)), (F(1, 0), F(0, 0))]


def test_fixture_roundtrip():
    for path in sorted(NETWORKS.glob("*.crn")):
        doc = parse(path.read_text())
        assert parse(serialize(doc)) == doc, path.name


def test_default_species():
    assert default_species(1) == ["X"]
    assert default_species(3) == ["X1", "X2", "X3"]


@settings(max_examples=100, deadline=None)
@given(egraphs())
def test_serialize_idempotent(G):
    text = serialize_egraph(G)
    doc = parse(text)
    assert serialize(doc) == text
    assert parse(serialize(doc)) == doc


@settings(max_examples=60, deadline=None)
@given(egraphs(dims=(2, 3)), st.randoms(use_true_random=False))
def test_species_permutation(G, rng):
    names = default_species(G.dim)
    doc = document_from_egraph(G, None, names)
    perm = names[:]
    rng.shuffle(perm)
    H, _ = to_egraph(doc, perm)
    idx = [names.index(p) for p in perm]
    assert [(tuple(s[i] for i in idx), tuple(t[i] for i in idx)) for s, t in G.reactions()] == H.reactions()
    assert classify(H).flags() == classify(G).flags()
