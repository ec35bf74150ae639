"""Seeded random networks for property tests, experiments and the CLI.

Every generator takes a :class:`random.Random` and is deterministic given
its state. Coordinates are small nonnegative integers unless noted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .egraph import EGraph, RateAssignment, split_edge
from .errors import RejectionBudgetExceeded, ValidationError
from .hull2d import convex_hull
from .linalg import Vector, add, combination, scale, sub, vec

MAX_SOURCES = 60


@dataclass(frozen=True)
class GeneratorConfig:
    max_coord: int = 3
    max_out: int = 2
    rate_max: int = 5


def _point(rng: random.Random, d: int, hi: int) -> Vector:
    return vec(rng.randint(0, hi) for _ in range(d))


def _distinct_points(rng: random.Random, d: int, n: int, hi: int) -> list:
    if (hi + 1) ** d < n:
        hi = int(round(n ** (1 / d))) + 1
    pts: dict = {}
    while len(pts) < n:
        pts.setdefault(_point(rng, d, hi), None)
    return list(pts)


def random_rates(rng: random.Random, m: int, rate_max: int = 5) -> RateAssignment:
    return RateAssignment(tuple(Fraction(rng.randint(1, rate_max), rng.randint(1, 3)) for _ in range(m)))


def random_network(rng: random.Random, dim: int, n_sources: int, cfg: GeneratorConfig = GeneratorConfig()) -> EGraph:
    """Sources with one to ``max_out`` reactions each, toward other sources or fresh points."""
    sources = _distinct_points(rng, dim, n_sources, cfg.max_coord)
    reactions: dict = {}
    for s in sources:
        for _ in range(rng.randint(1, cfg.max_out)):
            for _ in range(20):
                t = rng.choice(sources) if rng.random() < 0.5 else _point(rng, dim, cfg.max_coord)
                if t != s and (s, t) not in reactions:
                    reactions[(s, t)] = None
                    break
    return EGraph.from_reactions(list(reactions), dim)


def random_weakly_reversible(rng: random.Random, dim: int, n_nodes: int, cfg: GeneratorConfig = GeneratorConfig(),
                             reversible: bool = False) -> EGraph:
    """Strongly connected pieces: a cycle through each block of nodes plus chords closed into cycles."""
    nodes = _distinct_points(rng, dim, max(n_nodes, 2), cfg.max_coord)
    rng.shuffle(nodes)
    reactions: dict = {}
    blocks = []
    rest = list(nodes)
    while rest:
        size = min(len(rest), rng.randint(2, max(2, len(nodes))))
        if len(rest) - size == 1:
            size += 1
        blocks.append(rest[:size])
        rest = rest[size:]
    for block in blocks:
        if reversible:
            for a, b in zip(block, block[1:]):
                reactions[(a, b)] = reactions[(b, a)] = None
            for _ in range(rng.randint(0, len(block))):
                a, b = rng.sample(block, 2)
                reactions[(a, b)] = reactions[(b, a)] = None
        else:
            for a, b in zip(block, block[1:] + block[:1]):
                reactions[(a, b)] = None
            for _ in range(rng.randint(0, len(block))):
                # a chord a -> b closed by the cycle's path b -> ... -> a
                a, b = rng.sample(block, 2)
                reactions[(a, b)] = None
    return EGraph.from_reactions(list(reactions), dim)


def random_split_pair(rng: random.Random, dim: int, n_sources: int, n_splits: int = 1,
                      cfg: GeneratorConfig = GeneratorConfig()) -> tuple[EGraph, EGraph]:
    """``(G2, G1)`` where ``G1`` comes from ``G2`` by splitting reactions.

    Each split replaces ``v(e)`` by two or three vectors ``u_i`` with
    ``v(e) = sum lam_i u_i`` for random positive ``lam``; the last vector is
    solved for, so targets may have fractional coordinates.
    """
    G2 = random_network(rng, dim, n_sources, cfg)
    G1 = G2
    done = 0
    attempts = 0
    while done < n_splits and attempts < 200:
        attempts += 1
        e = rng.randrange(len(G1.edges))
        s, v = G1.source(e), G1.reaction_vector(e)
        m = rng.randint(2, 3)
        lam = [Fraction(rng.randint(1, 4), rng.randint(1, 2)) for _ in range(m)]
        us = [vec(rng.randint(-cfg.max_coord, cfg.max_coord) for _ in range(dim)) for _ in range(m - 1)]
        last = scale(1 / lam[-1], sub(v, combination(lam[:-1], us, dim)))
        targets = [add(s, u) for u in us + [last]]
        if any(c < 0 for t in targets for c in t) or any(t == s for t in targets):
            continue
        if len(set(targets)) != len(targets):
            continue
        try:
            G1 = split_edge(G1, e, targets)
        except ValidationError:
            continue
        done += 1
    return G2, G1


def random_zero_source_network(rng: random.Random, dim: int, n_nodes: int, n_hubs: int = 1,
                               cfg: GeneratorConfig = GeneratorConfig()) -> tuple[EGraph, RateAssignment]:
    """A weakly reversible network with rates in which each hub's monomial cancels.

    A hub ``h`` reacts to ``h + u_i`` with rates proportional to weights
    ``lam_i`` chosen so that ``sum lam_i u_i = 0``; it is fed by one reaction
    from the cycle through all other nodes, which keeps everything on cycles.
    """
    dim_hi = cfg.max_coord
    for _ in range(1000):
        base = _distinct_points(rng, dim, max(n_nodes, 2), dim_hi)
        reactions: dict = {}
        ok = True
        hubs = []
        for _ in range(n_hubs):
            h = vec(rng.randint(dim_hi, 2 * dim_hi) for _ in range(dim))
            m = rng.randint(2, 3)
            lam = [Fraction(rng.randint(1, 3)) for _ in range(m)]
            us = [vec(rng.randint(-dim_hi, dim_hi) for _ in range(dim)) for _ in range(m - 1)]
            last = scale(-1 / lam[-1], combination(lam[:-1], us, dim))
            targets = [add(h, u) for u in us + [last]]
            if any(c < 0 for t in targets for c in t) or h in targets or len(set(targets)) != m:
                ok = False
                break
            if h in base or h in hubs:
                ok = False
                break
            hubs.append(h)
            c = Fraction(rng.randint(1, cfg.rate_max), rng.randint(1, 2))
            for t, l in zip(targets, lam):
                reactions[(h, t)] = c * l
                if t not in base:
                    base.append(t)
        if not ok or any(t in hubs for t in base):
            continue
        rng.shuffle(base)
        for a, b in zip(base, base[1:] + base[:1]):
            reactions[(a, b)] = Fraction(rng.randint(1, cfg.rate_max), rng.randint(1, 3))
        for h in hubs:
            feeder = rng.choice(base)
            reactions[(feeder, h)] = Fraction(rng.randint(1, cfg.rate_max))
        G = EGraph.from_reactions(list(reactions), dim)
        return G, RateAssignment(tuple(reactions.values()))
    raise RejectionBudgetExceeded("could not place hub reactions inside the orthant")


def random_boundary_network(rng: random.Random, n_sources: int, cfg: GeneratorConfig = GeneratorConfig(),
                            extra_targets: bool = True) -> EGraph:
    """Planar network whose sources are exactly the boundary points of their hull.

    Targets are other sources or points of the hull, so reactions point
    inward; the result is not guaranteed strongly endotactic.
    """
    hi = max(cfg.max_coord, 4)
    while True:
        pts = _distinct_points(rng, 2, max(n_sources, 3), hi)
        hull = convex_hull(pts)
        boundary = [p for p in pts if hull.faces_of(p)]
        if len(hull.vertices) >= 3:
            break
    interior = [p for p in pts if p not in boundary]
    reactions: dict = {}
    for s in boundary:
        for _ in range(rng.randint(1, cfg.max_out)):
            pool = [t for t in boundary if t != s]
            if extra_targets:
                pool += interior
            t = rng.choice(pool)
            reactions[(s, t)] = None
    return EGraph.from_reactions(list(reactions), 2)


FLAG_CHOICES = (
    "reversible",
    "weakly-reversible",
    "source-only",
    "consistent",
    "endotactic",
    "strongly-endotactic",
    "extremally-weakly-reversible",
    "boundary-sources",
)


def satisfies(G: EGraph, flag: str) -> bool:
    from .classify import is_consistent, is_endotactic, is_extremally_weakly_reversible, is_strongly_endotactic
    from .cones import on_relative_hull_boundary
    from .egraph import is_reversible, is_source_only, is_weakly_reversible

    checks = {
        "reversible": lambda: is_reversible(G),
        "weakly-reversible": lambda: is_weakly_reversible(G),
        "source-only": lambda: is_source_only(G),
        "consistent": lambda: is_consistent(G)[0],
        "endotactic": lambda: is_endotactic(G)[0],
        "strongly-endotactic": lambda: is_strongly_endotactic(G)[0],
        "extremally-weakly-reversible": lambda: is_extremally_weakly_reversible(G),
        "boundary-sources": lambda: all(on_relative_hull_boundary(s, G.sources) for s in G.sources),
    }
    if flag not in checks:
        raise ValueError(f"unknown constraint {flag!r}; choose from {', '.join(FLAG_CHOICES)}")
    return checks[flag]()


def random_with_constraints(dim: int, n_sources: int, seed: int, require: Sequence[str] = (),
                            budget: int = 500, cfg: GeneratorConfig = GeneratorConfig()) -> EGraph:
    """Rejection sampling until every required flag holds."""
    for flag in require:
        if flag not in FLAG_CHOICES:
            raise ValueError(f"unknown constraint {flag!r}; choose from {', '.join(FLAG_CHOICES)}")
    if dim not in (1, 2, 3):
        raise ValueError("dimension must be 1, 2 or 3")
    if n_sources < 1 or n_sources > MAX_SOURCES:
        raise RejectionBudgetExceeded(f"{n_sources} sources is outside the supported range 1..{MAX_SOURCES}")
    rng = random.Random(seed)
    req = set(require)
    for _ in range(budget):
        if req & {"reversible", "weakly-reversible"}:
            G = random_weakly_reversible(rng, dim, n_sources, cfg, reversible="reversible" in req)
        elif "boundary-sources" in req and dim == 2:
            G = random_boundary_network(rng, n_sources, cfg)
        else:
            G = random_network(rng, dim, n_sources, cfg)
        if all(satisfies(G, f) for f in require):
            return G
    raise RejectionBudgetExceeded(f"no network met {sorted(req)} within {budget} attempts")


def random_strongly_endotactic_boundary(rng: random.Random, n_sources: int, budget: int = 2000,
                                        cfg: GeneratorConfig = GeneratorConfig()) -> Optional[EGraph]:
    """A planar strongly endotactic network with two-dimensional stoichiometric
    subspace and only boundary sources, by rejection."""
    from .classify import is_strongly_endotactic
    from .linalg import rank

    for _ in range(budget):
        G = random_boundary_network(rng, n_sources, cfg)
        if rank(list(G.reaction_vectors)) != 2:
            continue
        if not satisfies(G, "boundary-sources"):
            continue
        if is_strongly_endotactic(G)[0]:
            return G
    return None
