"""Euclidean embedded graphs: reaction networks as directed graphs on points.

Nodes are distinct nonnegative rational vectors (complexes); each edge is a
reaction ``s(e) -> t(e)`` with reaction vector ``v(e) = t(e) - s(e)``.
Everything here is immutable; "modifying" operations return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    DimensionMismatch,
    DuplicateNode,
    EmptyNetwork,
    InvalidRate,
    IsolatedNode,
    MergeableParallelEdges,
    NegativeCoordinate,
    SelfLoopEdge,
    SplitConeViolation,
    ValidationError,
)
from .linalg import Vector, as_fraction, show, sub, vec


@dataclass(frozen=True)
class Edge:
    source: int
    target: int


@dataclass(frozen=True)
class EGraph:
    """A validated reaction network. Construct with :func:`validate` or
    :meth:`EGraph.from_reactions`; direct construction validates too."""

    dim: int
    nodes: tuple
    edges: tuple

    def __post_init__(self):
        nodes = tuple(vec(n) for n in self.nodes)
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)
        _check(self.dim, nodes, edges)

    @classmethod
    def from_reactions(cls, reactions: Iterable[tuple[Sequence, Sequence]], dim: Optional[int] = None,
                       node_order: Sequence[Sequence] = ()) -> "EGraph":
        """Build from ``(source, target)`` vector pairs.

        Nodes are ordered by ``node_order`` first (entries not used by any
        reaction are skipped), then by first appearance.
        """
        reactions = [(vec(s), vec(t)) for s, t in reactions]
        used = {}
        for s, t in reactions:
            used.setdefault(s, None)
            used.setdefault(t, None)
        order = [n for n in dict.fromkeys(vec(n) for n in node_order) if n in used]
        placed = set(order)
        order += [n for n in used if n not in placed]
        index = {n: i for i, n in enumerate(order)}
        if dim is None:
            if not reactions:
                raise EmptyNetwork("a network needs at least one reaction")
            dim = len(reactions[0][0])
        return cls(dim, tuple(order), tuple(Edge(index[s], index[t]) for s, t in reactions))

    # -- geometry --------------------------------------------------------------

    def source(self, e: int) -> Vector:
        return self.nodes[self.edges[e].source]

    def target(self, e: int) -> Vector:
        return self.nodes[self.edges[e].target]

    def reaction_vector(self, e: int) -> Vector:
        return self.reaction_vectors[e]

    @cached_property
    def reaction_vectors(self) -> tuple:
        return tuple(sub(self.nodes[e.target], self.nodes[e.source]) for e in self.edges)

    @cached_property
    def sources(self) -> tuple:
        """Source complexes, deduplicated, in order of first use by an edge."""
        return tuple(dict.fromkeys(self.nodes[e.source] for e in self.edges))

    @cached_property
    def targets(self) -> tuple:
        return tuple(dict.fromkeys(self.nodes[e.target] for e in self.edges))

    @cached_property
    def _out_edges(self) -> dict:
        out: dict = {}
        for i, e in enumerate(self.edges):
            out.setdefault(self.nodes[e.source], []).append(i)
        return {k: tuple(v) for k, v in out.items()}

    def out_edges(self, s: Sequence) -> tuple:
        """Indices of edges whose source is ``s`` (empty if ``s`` is not a source)."""
        return self._out_edges.get(vec(s), ())

    def out_vectors(self, s: Sequence) -> list:
        """Generators of the reaction cone at ``s``."""
        return [self.reaction_vectors[i] for i in self.out_edges(s)]

    def reactions(self) -> list:
        return [(self.nodes[e.source], self.nodes[e.target]) for e in self.edges]

    def has_reaction(self, s: Sequence, t: Sequence) -> bool:
        return (vec(s), vec(t)) in self._reaction_set

    @cached_property
    def _reaction_set(self) -> frozenset:
        return frozenset(self.reactions())

    def __len__(self) -> int:
        return len(self.edges)


def _check(dim, nodes, edges) -> None:
    if not isinstance(dim, int) or dim < 1:
        raise DimensionMismatch(f"dimension must be a positive integer, got {dim!r}")
    if not nodes:
        raise EmptyNetwork("a network needs at least one node")
    seen = set()
    for y in nodes:
        if len(y) != dim:
            raise DimensionMismatch(f"node {show(y)} does not have dimension {dim}")
        if any(c < 0 for c in y):
            raise NegativeCoordinate(f"node {show(y)} has a negative coordinate")
        if y in seen:
            raise DuplicateNode(f"node {show(y)} appears twice")
        seen.add(y)
    touched = set()
    pairs = set()
    for e in edges:
        if not (0 <= e.source < len(nodes) and 0 <= e.target < len(nodes)):
            raise ValidationError(f"edge {e} refers to a missing node")
        if e.source == e.target:
            raise SelfLoopEdge(f"edge from {show(nodes[e.source])} to itself")
        if (e.source, e.target) in pairs:
            raise MergeableParallelEdges(f"two edges {show(nodes[e.source])} -> {show(nodes[e.target])}")
        pairs.add((e.source, e.target))
        touched.update((e.source, e.target))
    for i, y in enumerate(nodes):
        if i not in touched:
            raise IsolatedNode(f"node {show(y)} is not on any edge")


def validate(raw_nodes: Sequence[Sequence], raw_edges: Sequence[tuple[int, int]], dim: int) -> EGraph:
    return EGraph(dim, tuple(vec(n) for n in raw_nodes), tuple(Edge(int(a), int(b)) for a, b in raw_edges))


@dataclass(frozen=True)
class RateAssignment:
    """Positive rate constants, one per edge, in edge order."""

    rates: tuple

    def __post_init__(self):
        rates = tuple(as_fraction(k) for k in self.rates)
        if any(k <= 0 for k in rates):
            raise InvalidRate("rate constants must be positive")
        object.__setattr__(self, "rates", rates)

    def __len__(self):
        return len(self.rates)

    def __iter__(self):
        return iter(self.rates)

    def __getitem__(self, i):
        return self.rates[i]

    def scaled(self, a) -> "RateAssignment":
        return RateAssignment(tuple(as_fraction(a) * k for k in self.rates))


def as_rates(K) -> RateAssignment:
    return K if isinstance(K, RateAssignment) else RateAssignment(tuple(K))


# -- structural predicates -------------------------------------------------------

def strongly_connected_components(n: int, arcs: Iterable[tuple[int, int]]) -> list[int]:
    """Component label for every vertex (Tarjan, iterative)."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in arcs:
        adj[a].append(b)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    n_comp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                u = adj[v][i]
                if index[u] == -1:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack[u] = True
                    work.append((u, 0))
                elif on_stack[u]:
                    low[v] = min(low[v], index[u])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp[u] = n_comp
                    if u == v:
                        break
                n_comp += 1
    return comp


def edge_without_reverse(G: EGraph) -> Optional[int]:
    for i, e in enumerate(G.edges):
        if not G.has_reaction(G.nodes[e.target], G.nodes[e.source]):
            return i
    return None


def is_reversible(G: EGraph) -> bool:
    return edge_without_reverse(G) is None


def edge_not_in_cycle(G: EGraph) -> Optional[int]:
    comp = strongly_connected_components(len(G.nodes), ((e.source, e.target) for e in G.edges))
    for i, e in enumerate(G.edges):
        if comp[e.source] != comp[e.target]:
            return i
    return None


def is_weakly_reversible(G: EGraph) -> bool:
    return edge_not_in_cycle(G) is None


def product_only_node(G: EGraph) -> Optional[Vector]:
    sources = set(G.sources)
    return next((t for t in G.targets if t not in sources), None)


def is_source_only(G: EGraph) -> bool:
    return product_only_node(G) is None


def split_edge(G: EGraph, e: int, replacement_targets: Sequence[Sequence]) -> EGraph:
    """Replace edge ``e`` by edges from ``s(e)`` to each replacement target.

    The reaction vector of ``e`` must lie in the relative interior of the
    cone spanned by the new reaction vectors; then the new network includes
    the dynamics of ``G``. Replacement edges that already exist are not
    duplicated, and a node left without edges is dropped.
    """
    from .cones import relint_member

    s = G.source(e)
    targets = list(dict.fromkeys(vec(t) for t in replacement_targets))
    if not targets:
        raise SplitConeViolation("at least one replacement target is required")
    for t in targets:
        if len(t) != G.dim:
            raise DimensionMismatch(f"target {show(t)} does not have dimension {G.dim}")
        if t == s:
            raise SelfLoopEdge(f"replacement target {show(t)} equals the source")
    ok, _ = relint_member(G.reaction_vector(e), [sub(t, s) for t in targets])
    if not ok:
        raise SplitConeViolation(
            f"v(e) = {show(G.reaction_vector(e))} is not in the relative interior of the replacement cone"
        )
    reactions = G.reactions()
    new = [(s, t) for t in targets if (s, t) not in set(reactions[:e] + reactions[e + 1:])]
    merged = reactions[:e] + new + reactions[e + 1:]
    merged = list(dict.fromkeys(merged))
    return EGraph.from_reactions(merged, G.dim, node_order=G.nodes)
