"""Constructions of networks that generate (at least) the same dynamics.

* :func:`make_source_only` splits every reaction into a product that is not
  a source across reactions toward existing sources.
* :func:`eliminate_zero_sources` removes, from a weakly reversible network
  with rates, every source whose monomial cancels in the field, keeping the
  field and weak reversibility.
* :func:`ewr_realize_2d` builds, for a planar strongly endotactic network
  whose sources all lie on the boundary of their hull, a weakly reversible
  network on the same sources that includes its dynamics.

Each result is rechecked before it is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import lp
from .classify import is_endotactic, is_strongly_endotactic
from .cones import cone_member, on_relative_hull_boundary, relint_contained
from .egraph import (
    EGraph,
    RateAssignment,
    as_rates,
    is_source_only,
    is_weakly_reversible,
    strongly_connected_components,
)
from .equivalence import dynamics_included
from .errors import (
    InteriorSourcePresent,
    InternalInvariantBroken,
    NotEndotactic,
    NotStronglyEndotactic,
    NotWeaklyReversible,
    PostconditionFailed,
    ReplacementInfeasible,
    StoichiometricRankDeficient,
    WrongDimension,
)
from .hull2d import convex_hull
from .linalg import combination, rank, show, sub
from .massaction import fields_equal, generate_field

SPLIT = "split"
BYPASS = "bypass"
FACE = "face"
INWARD = "inward"
PATH = "path"


@dataclass(frozen=True)
class ProvenanceRecord:
    """``v(edge) = sum c_i v(parents_i)`` with every ``c_i`` positive.

    ``split``: ``edge`` is an input reaction and ``parents`` the reactions
    replacing it. ``bypass``: ``edge`` is new and composes two removed
    reactions. ``face``/``inward``: a new reaction that is its own parent.
    ``path``: a new reaction whose vector lies in the cone already present
    at its source; ``parents`` are the reactions spanning that cone and the
    coefficients may be zero.
    """

    kind: str
    edge: tuple
    parents: tuple
    coefficients: tuple

    def check(self) -> bool:
        s, t = self.edge
        d = len(s)
        vs = [sub(b, a) for a, b in self.parents]
        if len(vs) != len(self.coefficients):
            return False
        if self.kind == PATH:
            if any(c < 0 for c in self.coefficients):
                return False
        elif any(c <= 0 for c in self.coefficients):
            return False
        return combination(self.coefficients, vs, d) == sub(t, s)


@dataclass(frozen=True)
class RealizationResult:
    graph: EGraph
    rate_map: Optional[RateAssignment]
    provenance: tuple

    def check_provenance(self) -> bool:
        return all(r.check() for r in self.provenance)


def _build(reactions: dict, dim: int, node_order) -> tuple[EGraph, Optional[RateAssignment]]:
    G = EGraph.from_reactions(list(reactions), dim, node_order=node_order)
    rates = list(reactions.values())
    if any(k is None for k in rates):
        return G, None
    return G, RateAssignment(tuple(rates))


# -- source-only --------------------------------------------------------------------

def _split_toward_sources(G: EGraph, e: int) -> tuple[list, list]:
    """Sources and positive weights with ``v(e) = sum lam_i (s_i - s(e))``.

    The support of a basic solution is used, so the chosen differences are
    linearly independent and ``v(e)`` is in the relative interior of their cone.
    """
    s = G.source(e)
    others = [x for x in G.sources if x != s]
    gens = [sub(x, s) for x in others]
    v = G.reaction_vector(e)
    if not gens:
        raise ReplacementInfeasible(f"no other source to split {show(s)} -> {show(G.target(e))} toward")
    x = lp.feasible_point([[g[r] for g in gens] for r in range(G.dim)], v, n=len(gens))
    if x is None:
        raise ReplacementInfeasible(f"{show(v)} is not in the cone of source differences at {show(s)}")
    support = [i for i, lam in enumerate(x) if lam > 0]
    return [others[i] for i in support], [x[i] for i in support]


def make_source_only(G: EGraph, K=None) -> RealizationResult:
    """A source-only network on the sources of ``G`` that includes its dynamics.

    Reactions into a source are kept. Every other reaction is replaced by
    reactions from the same source to other sources. When rates are given,
    a replaced reaction with rate ``k`` passes ``k * lam_i`` to its
    ``i``-th replacement, so the field is unchanged.
    """
    ok, _ = is_endotactic(G)
    if not ok:
        raise NotEndotactic("the source-only construction needs an endotactic network")
    K = as_rates(K) if K is not None else None
    sources = set(G.sources)
    reactions: dict = {}
    provenance = []

    def put(r, k):
        if r in reactions:
            reactions[r] = None if k is None else reactions[r] + k
        else:
            reactions[r] = k

    for i, (s, t) in enumerate(G.reactions()):
        k = K[i] if K is not None else None
        if t in sources:
            put((s, t), k)
            continue
        targets, lams = _split_toward_sources(G, i)
        for x, lam in zip(targets, lams):
            put((s, x), None if k is None else k * lam)
        provenance.append(ProvenanceRecord(SPLIT, (s, t), tuple((s, x) for x in targets), tuple(lams)))

    H, rates = _build(reactions, G.dim, G.nodes)
    if not is_source_only(H):
        raise PostconditionFailed("source-only construction left a product-only node")
    if not dynamics_included(G, H).holds:
        raise PostconditionFailed("source-only construction lost dynamics")
    if K is not None and not fields_equal(generate_field(G, K), generate_field(H, rates)):
        raise PostconditionFailed("source-only construction changed the field")
    return RealizationResult(H, rates, tuple(provenance))


# -- zero-coefficient sources ---------------------------------------------------------

def _net_coefficient(reactions: dict, s) -> tuple:
    out = [Fraction(0)] * len(s)
    for (a, b), k in reactions.items():
        if a == s:
            for r in range(len(s)):
                out[r] += k * (b[r] - a[r])
    return tuple(out)


def eliminate_zero_sources(G: EGraph, K) -> RealizationResult:
    """Remove sources whose monomial has zero net coefficient.

    Each such source ``s*`` is bypassed: every pair of an incoming reaction
    ``e_in`` and an outgoing reaction ``e_out`` becomes ``s(e_in) -> t(e_out)``
    with rate ``k(e_in) * k(e_out) / (total outgoing rate at s*)``. Sources are
    handled in lexicographic order; self-loops are dropped and parallel
    reactions merge by adding rates.
    """
    if not is_weakly_reversible(G):
        raise NotWeaklyReversible("zero-source elimination needs a weakly reversible network")
    K = as_rates(K)
    f = generate_field(G, K)
    keep = set(f.exponents)
    reactions = dict(zip(G.reactions(), K))
    provenance = []
    while True:
        current = sorted({a for a, _ in reactions})
        zero = [s for s in current if s not in keep and not any(_net_coefficient(reactions, s))]
        if not zero:
            break
        star = zero[0]
        outgoing = [(r, k) for r, k in reactions.items() if r[0] == star]
        incoming = [(r, k) for r, k in reactions.items() if r[1] == star]
        total = sum(k for _, k in outgoing)
        for r, _ in outgoing + incoming:
            del reactions[r]
        for (a, _), k_in in incoming:
            for (_, b), k_out in outgoing:
                if a == b:
                    continue
                k = k_in * k_out / total
                reactions[(a, b)] = reactions.get((a, b), 0) + k
                provenance.append(ProvenanceRecord(BYPASS, (a, b), ((a, star), (star, b)), (Fraction(1), Fraction(1))))

    H, rates = _build(reactions, G.dim, G.nodes)
    if not fields_equal(generate_field(H, rates), f):
        raise InternalInvariantBroken("zero-source elimination changed the field")
    if set(H.sources) != keep:
        raise InternalInvariantBroken("zero-source elimination left sources off the field's monomials")
    if not is_weakly_reversible(H):
        raise InternalInvariantBroken("zero-source elimination broke weak reversibility")
    return RealizationResult(H, rates, tuple(provenance))


# -- planar construction ----------------------------------------------------------

def _ray_face(s, gens, faces) -> Optional[tuple]:
    """The hull face at ``s`` whose direction every generator points along."""
    for face in faces:
        other = face[-1] if face[0] == s else face[0]
        u = sub(other, s)
        if all(g[0] * u[1] - g[1] * u[0] == 0 and g[0] * u[0] + g[1] * u[1] > 0 for g in gens):
            return face
    return None


def ewr_realize_2d(G: EGraph) -> RealizationResult:
    """A weakly reversible network on the sources of ``G`` including its dynamics.

    Requires a planar, strongly endotactic network with a two-dimensional
    stoichiometric subspace whose sources all lie on the boundary of their
    convex hull. An input that is already weakly reversible is returned as
    it is.

    1. Connect every ordered pair of sources sharing a hull face.
    2. At each source keep those reactions when their cone's relative
       interior already contains that of ``G``'s cone. Otherwise, at a source
       inside a face, add one reaction toward the lexicographically smallest
       source off the face; at a corner, keep only the reactions along the
       face that ``G``'s reactions follow.
    3. For every reaction not yet on a cycle, route a return path through
       reactions whose vectors already lie in the cone at their source, so
       no cone changes.
    """
    if G.dim != 2:
        raise WrongDimension(f"the planar construction needs dimension 2, got {G.dim}")
    if not is_strongly_endotactic(G)[0]:
        raise NotStronglyEndotactic("the planar construction needs a strongly endotactic network")
    if is_weakly_reversible(G):
        # already a valid answer, whatever its rank or source placement
        if not dynamics_included(G, G).holds:
            raise PostconditionFailed("inclusion is not reflexive")
        return RealizationResult(G, None, ())
    if rank(list(G.reaction_vectors)) != 2:
        raise StoichiometricRankDeficient("the stoichiometric subspace must be two-dimensional")
    S = list(G.sources)
    for s in S:
        if not on_relative_hull_boundary(s, S):
            raise InteriorSourcePresent(f"source {show(s)} lies inside the hull of the sources")

    hull = convex_hull(S)
    order = {s: i for i, s in enumerate(S)}
    stage1 = {s: [t for face in hull.faces_of(s) for t in face if t != s] for s in S}
    stage1 = {s: sorted(set(ts), key=order.get) for s, ts in stage1.items()}

    reactions: dict = {}
    provenance = []
    for s in S:
        gens = G.out_vectors(s)
        targets = stage1[s]
        if relint_contained(gens, [sub(t, s) for t in targets])[0]:
            kept = targets
        elif not hull.is_vertex(s):
            face = hull.faces_of(s)[0]
            off = min(t for t in S if t not in face)
            kept = targets + [off]
            provenance.append(ProvenanceRecord(INWARD, (s, off), ((s, off),), (Fraction(1),)))
        else:
            face = _ray_face(s, gens, hull.faces_of(s))
            if face is None:
                raise PostconditionFailed(f"reaction cone at corner {show(s)} matches no construction case")
            kept = [t for t in targets if t in face]
        for t in kept:
            reactions[(s, t)] = None
        provenance.extend(
            ProvenanceRecord(FACE, (s, t), ((s, t),), (Fraction(1),)) for t in kept if t in targets
        )

    # reactions that may be added without changing any cone
    cone_at = {s: [sub(t, a) for a, t in reactions if a == s] for s in S}
    parents_at = {s: [(a, t) for a, t in reactions if a == s] for s in S}
    allowed = {
        x: [y for y in S if y != x and cone_member(sub(y, x), cone_at[x])[0]] for x in S
    }
    index = {s: i for i, s in enumerate(S)}

    def components():
        return strongly_connected_components(len(S), [(index[a], index[b]) for a, b in reactions])

    comp = components()
    for a, b in list(reactions):
        if comp[index[a]] == comp[index[b]]:
            continue
        prev = {b: None}
        queue = deque([b])
        while queue and a not in prev:
            x = queue.popleft()
            for y in allowed[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if a not in prev:
            raise PostconditionFailed(f"no return path from {show(b)} to {show(a)}")
        y = a
        while prev[y] is not None:
            x = prev[y]
            if (x, y) not in reactions:
                reactions[(x, y)] = None
                _, wit = cone_member(sub(y, x), cone_at[x])
                provenance.append(ProvenanceRecord(PATH, (x, y), tuple(parents_at[x]), wit.lambdas))
            y = x
        comp = components()

    H, _ = _build(reactions, G.dim, G.nodes)
    if not is_weakly_reversible(H):
        raise PostconditionFailed("planar construction is not weakly reversible")
    if not is_strongly_endotactic(H)[0]:
        raise PostconditionFailed("planar construction is not strongly endotactic")
    if not dynamics_included(G, H).holds:
        raise PostconditionFailed("planar construction does not include the input dynamics")
    return RealizationResult(H, None, tuple(provenance))
