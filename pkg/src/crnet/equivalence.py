"""Dynamics inclusion, capacity for equivalence, and explicit rate witnesses.

Everything reduces to per-source cone questions about the reaction cones
``V^G(s)``, the cone spanned by the reaction vectors leaving ``s`` (``{0}``
when ``s`` is not a source).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cones import (
    cone_member,
    relint_contained,
    relint_intersect,
    relint_member,
)
from .egraph import EGraph, RateAssignment
from .errors import DimensionMismatch, ExponentNotASource, NoPositiveSolution
from .linalg import Vector, combination, is_zero, show, zeros
from .massaction import VectorField

SOURCE_NOT_COVERED = "SourceNotCovered"
RELINT_NOT_CONTAINED = "RelIntNotContained"


def _same_dim(G1: EGraph, G2: EGraph) -> int:
    if G1.dim != G2.dim:
        raise DimensionMismatch(f"networks of dimension {G1.dim} and {G2.dim}")
    return G1.dim


@dataclass(frozen=True)
class InclusionReport:
    """Outcome of ``G2 ⊑ G1``.

    On failure, ``failing_rates`` is a rate assignment for ``G2`` whose field
    has coefficient ``failing_point`` at ``failing_source``; no positive rates
    on ``G1`` produce that coefficient there.
    """

    holds: bool
    failing_source: Optional[Vector] = None
    failing_reason: Optional[str] = None
    witnesses: dict = field(default_factory=dict, compare=False)
    failing_point: Optional[Vector] = None
    failing_rates: Optional[RateAssignment] = None

    def __bool__(self) -> bool:
        return self.holds


def _uncoverable_point(gens2: list, gens1: list, d: int) -> tuple[Vector, tuple]:
    """A strictly positive combination of ``gens2`` outside ``relint(cone(gens1))``."""
    if not gens2:
        return zeros(d), ()
    lam = [1] * len(gens2)
    p = combination(lam, gens2, d)
    if not relint_member(p, gens1)[0]:
        return p, tuple(lam)
    # some generator lies outside the closed cone; weighting it heavily
    # eventually leaves the cone too, since the cone is closed
    bad = next(i for i, g in enumerate(gens2) if not cone_member(g, gens1)[0])
    t = 2
    while True:
        lam = [1] * len(gens2)
        lam[bad] = t
        p = combination(lam, gens2, d)
        if not cone_member(p, gens1)[0]:
            return p, tuple(lam)
        t *= 2


def _rates_with(G: EGraph, s: Vector, local: tuple) -> RateAssignment:
    rates = [1] * len(G.edges)
    for i, k in zip(G.out_edges(s), local):
        rates[i] = k
    return RateAssignment(tuple(rates))


def dynamics_included(G2: EGraph, G1: EGraph) -> InclusionReport:
    """Is every field generated by ``G2`` also generated by ``G1``?

    Holds iff every source of ``G2`` is a source of ``G1`` and, at every
    source ``s`` of ``G1``, ``relint V^{G2}(s)`` lies inside ``relint V^{G1}(s)``.
    """
    d = _same_dim(G1, G2)
    sc1 = set(G1.sources)
    for s in G2.sources:
        if s not in sc1:
            gens = G2.out_vectors(s)
            lam = [1] * len(gens)
            if is_zero(combination(lam, gens, d)):
                lam[0] = 2
            point = combination(lam, gens, d)
            return InclusionReport(False, s, SOURCE_NOT_COVERED, {}, point, _rates_with(G2, s, tuple(lam)))
    witnesses = {}
    for s in G1.sources:
        gens2, gens1 = G2.out_vectors(s), G1.out_vectors(s)
        ok, wit = relint_contained(gens2, gens1, d)
        witnesses[s] = wit
        if not ok:
            point, lam = _uncoverable_point(gens2, gens1, d)
            return InclusionReport(False, s, RELINT_NOT_CONTAINED, witnesses, point, _rates_with(G2, s, lam))
    return InclusionReport(True, witnesses=witnesses)


@dataclass(frozen=True)
class CapacityReport:
    """Outcome of ``G1 ⊓ G2``; unpacks as ``(holds, shared_field)``."""

    holds: bool
    shared_field: Optional[VectorField]
    failing_source: Optional[Vector] = None
    witnesses: dict = field(default_factory=dict, compare=False)

    def __iter__(self):
        return iter((self.holds, self.shared_field))


def capacity_for_equivalence(G1: EGraph, G2: EGraph) -> CapacityReport:
    """Can some choice of rates make the two networks generate the same field?

    True iff at every source of either network the relative interiors of the
    two reaction cones meet. The shared field puts the common point at each
    source as that monomial's coefficient.
    """
    d = _same_dim(G1, G2)
    witnesses: dict = {}
    terms = []
    for s in dict.fromkeys(G1.sources + G2.sources):
        ok, wit = relint_intersect(G1.out_vectors(s), G2.out_vectors(s), d)
        witnesses[s] = wit
        if not ok:
            return CapacityReport(False, None, s, witnesses)
        terms.append((s, wit.point))
    return CapacityReport(True, VectorField.from_terms(d, terms), None, witnesses)


def find_rate_witness(G: EGraph, f: VectorField) -> RateAssignment:
    """Positive rates on ``G`` that generate ``f`` exactly.

    Each source is solved on its own: the rates on its edges must be a
    strictly positive representation of the coefficient of ``x^s`` in ``f``
    (zero when ``f`` has no such term).
    """
    if f.dim != G.dim:
        raise DimensionMismatch(f"field of dimension {f.dim} for a network of dimension {G.dim}")
    sc = set(G.sources)
    for exp in f.exponents:
        if exp not in sc:
            raise ExponentNotASource(f"monomial x^{show(exp)} has no matching source")
    rates: list = [None] * len(G.edges)
    for s in G.sources:
        target = f.coefficient(s)
        ok, wit = relint_member(target, G.out_vectors(s))
        if not ok:
            raise NoPositiveSolution(f"coefficient {show(target)} at source {show(s)} needs a nonpositive rate")
        for i, k in zip(G.out_edges(s), wit.lambdas):
            rates[i] = k
    return RateAssignment(tuple(rates))
