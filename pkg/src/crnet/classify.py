"""Network classifications that quantify over directions.

Whether a direction ``w`` violates the endotactic condition depends only on
the signs of ``w`` against the reaction vectors and the pairwise source
differences, so checking one witness per sign cell of that arrangement is
exhaustive. ``w = 0`` never violates anything and is not examined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key, lru_cache
from itertools import combinations
from math import lcm
from typing import Optional, Sequence

from .arrangement import enumerate_sign_cells
from .cones import ConeWitness, on_relative_hull_boundary, relint_member
from .egraph import (
    EGraph,
    edge_not_in_cycle,
    edge_without_reverse,
    is_weakly_reversible,
    product_only_node,
)
from .errors import EmptyExtremalSet, WrongDimension
from .linalg import Vector, dot, sub, vec, zeros


@dataclass(frozen=True)
class Violation:
    """A direction ``w`` and an edge ``e`` with ``w.v(e) < 0`` that nothing counters."""

    w: Vector
    edge: int


def is_consistent(G: EGraph) -> tuple[bool, ConeWitness]:
    """Do the reaction vectors admit a strictly positive vanishing combination?"""
    return relint_member(zeros(G.dim), list(G.reaction_vectors))


def direction_set(G: EGraph) -> list[Vector]:
    """Reaction vectors followed by differences of distinct sources."""
    D = list(G.reaction_vectors)
    D += [sub(a, b) for a, b in combinations(G.sources, 2)]
    return D


@lru_cache(maxsize=512)
def _cells(G: EGraph) -> tuple:
    return tuple(enumerate_sign_cells(direction_set(G), G.dim))


def _integer_edges(G: EGraph) -> tuple[list, list]:
    # a common positive rescaling of every node preserves all signs below
    den = lcm(*(c.denominator for n in G.nodes for c in n))
    nodes = [tuple(int(c * den) for c in n) for n in G.nodes]
    src = [nodes[e.source] for e in G.edges]
    vecs = [tuple(b - a for a, b in zip(nodes[e.source], nodes[e.target])) for e in G.edges]
    return src, vecs


def check_violation(G: EGraph, w: Sequence, e: int, strong: bool = False) -> bool:
    """True iff ``(w, e)`` breaks the (strongly) endotactic condition.

    Evaluated straight from the definition: ``w.v(e) < 0`` and no edge
    ``e_j`` has ``w.(s(e_j) - s(e)) < 0`` and ``w.v(e_j) > 0`` (and, when
    ``strong``, ``w.(s(e_j) - s(e_k)) <= 0`` for every edge ``e_k``).
    """
    w = vec(w)
    if dot(w, G.reaction_vector(e)) >= 0:
        return False
    s_e = G.source(e)
    for j in range(len(G.edges)):
        s_j = G.source(j)
        if dot(w, sub(s_j, s_e)) < 0 and dot(w, G.reaction_vector(j)) > 0:
            if not strong or all(dot(w, sub(s_j, G.source(k))) <= 0 for k in range(len(G.edges))):
                return False
    return True


def _violation_at(w, src: list, vecs: list, strong: bool) -> Optional[int]:
    n = len(src)
    ws = [sum(a * b for a, b in zip(w, s)) for s in src]
    wv = [sum(a * b for a, b in zip(w, v)) for v in vecs]
    low = min(ws)
    for i in range(n):
        if wv[i] >= 0:
            continue
        countered = False
        for j in range(n):
            if ws[j] < ws[i] and wv[j] > 0 and (not strong or ws[j] == low):
                countered = True
                break
        if not countered:
            return i
    return None


def _search(G: EGraph, strong: bool) -> Optional[Violation]:
    src, vecs = _integer_edges(G)
    for cell in _cells(G):
        i = _violation_at(cell.witness, src, vecs, strong)
        if i is not None:
            return Violation(cell.witness, i)
    return None


def is_endotactic(G: EGraph) -> tuple[bool, Optional[Violation]]:
    v = _search(G, strong=False)
    return v is None, v


def is_strongly_endotactic(G: EGraph) -> tuple[bool, Optional[Violation]]:
    v = _search(G, strong=True)
    return v is None, v


# -- extremal structure -----------------------------------------------------------

def extremal_sources(G: EGraph) -> tuple:
    """Sources on the relative boundary of the convex hull of all sources."""
    S = G.sources
    return tuple(s for s in S if on_relative_hull_boundary(s, S))


def extremal_subnetwork(G: EGraph) -> EGraph:
    """The edges whose source is extremal, with the nodes they touch."""
    ext = set(extremal_sources(G))
    kept = [r for r in G.reactions() if r[0] in ext]
    if not kept:
        raise EmptyExtremalSet("no source lies on the hull boundary")
    return EGraph.from_reactions(kept, G.dim, node_order=G.nodes)


def is_extremally_weakly_reversible(G: EGraph) -> bool:
    return is_weakly_reversible(extremal_subnetwork(G))


# -- independent two-dimensional check ------------------------------------------

def _half(u) -> int:
    return 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _angle_cmp(a, b) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = _cross(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _sweep_violates(G: EGraph, w) -> bool:
    # w-lowest source reached by a w-increasing edge versus w-lowest
    # w-decreasing edge: some decreasing edge is uncountered iff none of the
    # increasing edges sits strictly below it
    m_dec = m_inc = None
    for i in range(len(G.edges)):
        h = dot(w, G.source(i))
        t = dot(w, G.reaction_vector(i))
        if t < 0 and (m_dec is None or h < m_dec):
            m_dec = h
        elif t > 0 and (m_inc is None or h < m_inc):
            m_inc = h
    if m_dec is None:
        return False
    return m_inc is None or m_dec <= m_inc


def endotactic_2d_sweep_oracle(G: EGraph) -> bool:
    """Angular sweep over directions in the plane.

    The predicate can only change where ``w`` becomes orthogonal to a
    reaction vector or to a source difference; testing each such critical
    direction and one direction strictly inside each gap between them
    covers every case.
    """
    if G.dim != 2:
        raise WrongDimension(f"the sweep oracle needs dimension 2, got {G.dim}")
    crit = []
    for d in direction_set(G):
        n = (-d[1], d[0])
        crit.append(n)
        crit.append((-n[0], -n[1]))
    crit.sort(key=cmp_to_key(_angle_cmp))
    dirs: list = []
    for u in crit:
        if dirs and _cross(dirs[-1], u) == 0 and dot(dirs[-1], u) > 0:
            continue
        dirs.append(u)
    if len(dirs) > 1 and _cross(dirs[-1], dirs[0]) == 0 and dot(dirs[-1], dirs[0]) > 0:
        dirs.pop()
    probes = list(dirs)
    for a, b in zip(dirs, dirs[1:] + dirs[:1]):
        c = _cross(a, b)
        # the critical set is symmetric, so every gap is at most a half-turn
        if c > 0:
            probes.append((a[0] + b[0], a[1] + b[1]))
        else:
            probes.append((-a[1], a[0]))
    return not any(_sweep_violates(G, w) for w in probes)


# -- full report ------------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationReport:
    reversible: bool
    weakly_reversible: bool
    source_only: bool
    consistent: bool
    endotactic: bool
    strongly_endotactic: bool
    extremally_weakly_reversible: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    FLAGS = (
        "reversible",
        "weakly_reversible",
        "source_only",
        "consistent",
        "endotactic",
        "strongly_endotactic",
        "extremally_weakly_reversible",
    )

    def flags(self) -> dict:
        return {name: getattr(self, name) for name in self.FLAGS}


def classify(G: EGraph) -> ClassificationReport:
    """Every classification flag together with a certificate for each.

    Witnesses: an edge index with no reverse or not on a cycle, a product-only
    node, the consistency certificate, and violating ``(w, edge)`` pairs.
    """
    no_rev = edge_without_reverse(G)
    no_cycle = edge_not_in_cycle(G)
    product = product_only_node(G)
    cons, cons_wit = is_consistent(G)
    endo, endo_wit = is_endotactic(G)
    strong, strong_wit = is_strongly_endotactic(G)
    ext = extremal_subnetwork(G)
    ext_edge = edge_not_in_cycle(ext)
    return ClassificationReport(
        reversible=no_rev is None,
        weakly_reversible=no_cycle is None,
        source_only=product is None,
        consistent=cons,
        endotactic=endo,
        strongly_endotactic=strong,
        extremally_weakly_reversible=ext_edge is None,
        witnesses={
            "reversible": no_rev,
            "weakly_reversible": no_cycle,
            "source_only": product,
            "consistent": cons_wit,
            "endotactic": endo_wit,
            "strongly_endotactic": strong_wit,
            "extremally_weakly_reversible": None if ext_edge is None else ext.reactions()[ext_edge],
        },
    )
