"""Decision procedures for finitely generated cones, all by exact LP.

Every query returns a certificate that can be rechecked without the solver:
either nonnegative (or strictly positive) coefficients expressing the target
as a combination of the generators, or a separating direction satisfying the
sign conditions of the corresponding theorem of the alternative.

Conventions: a cone with no generators is ``{0}`` and its relative interior
is ``{0}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import lp
from .errors import DimensionMismatch, PointNotInSet
from .linalg import Vector, combination, dot, is_zero, neg, show, sub, vec, zeros

COEFFICIENTS = "coefficients"
SEPARATING = "separating_direction"

FARKAS = "farkas"  # membership in the closed cone
STIEMKE = "stiemke"  # membership in the relative interior


@dataclass(frozen=True)
class ConeWitness:
    """Certificate for a cone or relative-interior membership query.

    With ``alternative == FARKAS`` the coefficients are nonnegative and a
    direction ``w`` satisfies ``w.g >= 0`` for all generators and ``w.v < 0``.
    With ``alternative == STIEMKE`` the coefficients are strictly positive and
    a direction satisfies ``w.g <= 0``, ``w.v >= 0`` with at least one of
    these inequalities strict.
    """

    kind: str
    alternative: str
    lambdas: Optional[tuple] = None
    direction: Optional[Vector] = None

    def check(self, v: Sequence, gens: Sequence[Sequence]) -> bool:
        v = vec(v)
        gens = [vec(g) for g in gens]
        if self.kind == COEFFICIENTS:
            lam = self.lambdas
            if lam is None or len(lam) != len(gens):
                return False
            if self.alternative == FARKAS and any(x < 0 for x in lam):
                return False
            if self.alternative == STIEMKE and any(x <= 0 for x in lam):
                return False
            return combination(lam, gens, len(v)) == v
        w = self.direction
        if w is None or len(w) != len(v):
            return False
        if self.alternative == FARKAS:
            return all(dot(w, g) >= 0 for g in gens) and dot(w, v) < 0
        dots = [dot(w, g) for g in gens] + [-dot(w, v)]
        return all(x <= 0 for x in dots) and any(x < 0 for x in dots)

    @property
    def holds(self) -> bool:
        return self.kind == COEFFICIENTS


def _check_dims(vectors: Sequence[Sequence], d: Optional[int] = None) -> int:
    dims = {len(u) for u in vectors}
    if d is not None:
        dims.add(d)
    if len(dims) > 1:
        raise DimensionMismatch(f"vectors of different dimensions: {sorted(dims)}")
    if not dims:
        raise DimensionMismatch("cannot infer dimension of an empty query")
    return dims.pop()


def _columns(gens: Sequence[Vector], d: int) -> list[list[Fraction]]:
    return [[g[r] for g in gens] for r in range(d)]


def _free_direction(constraints_le: Sequence[Vector], equal: Sequence[tuple[Vector, Fraction]], d: int) -> Optional[Vector]:
    """Find ``w`` (free sign) with ``w.a <= 0`` for each ``a`` and ``w.b = beta`` for each pair."""
    A_ub = [list(a) + [-x for x in a] for a in constraints_le]
    A_eq = [list(b) + [-x for x in b] for b, _ in equal]
    b_eq = [beta for _, beta in equal]
    res = lp.solve([0] * (2 * d), A_eq, b_eq, A_ub, [0] * len(A_ub))
    if res.status != lp.OPTIMAL:
        return None
    return tuple(res.x[k] - res.x[d + k] for k in range(d))


def stiemke_direction(vectors: Sequence[Sequence], d: Optional[int] = None) -> Optional[Vector]:
    """``w`` with ``w.u <= 0`` for all ``u`` and strict for at least one, or ``None``."""
    vectors = [vec(u) for u in vectors]
    d = _check_dims(vectors, d)
    total = combination([1] * len(vectors), vectors, d)
    return _free_direction(vectors, [(total, Fraction(-1))], d)


def positive_kernel(vectors: Sequence[Sequence], d: Optional[int] = None) -> Optional[tuple]:
    """Strictly positive ``lam`` with ``sum lam_i u_i = 0``, or ``None``.

    Maximizes ``delta`` subject to ``lam_i >= delta`` and ``delta <= 1``.
    """
    vectors = [vec(u) for u in vectors]
    d = _check_dims(vectors, d)
    m = len(vectors)
    if m == 0:
        return ()
    total = combination([1] * m, vectors, d)
    # lam_i = mu_i + delta
    A_eq = [[u[r] for u in vectors] + [total[r]] for r in range(d)]
    res = lp.solve([0] * m + [1], A_eq, [0] * d, [[0] * m + [1]], [1])
    if res.status != lp.OPTIMAL or res.value <= 0:
        return None
    delta = res.x[m]
    return tuple(res.x[i] + delta for i in range(m))


def cone_member(v: Sequence, gens: Sequence[Sequence]) -> tuple[bool, ConeWitness]:
    """Is ``v`` a nonnegative combination of ``gens``?"""
    v = vec(v)
    gens = [vec(g) for g in gens]
    d = _check_dims(gens + [v])
    if gens:
        x = lp.feasible_point(_columns(gens, d), v, n=len(gens))
        if x is not None:
            return True, ConeWitness(COEFFICIENTS, FARKAS, lambdas=tuple(x))
    elif is_zero(v):
        return True, ConeWitness(COEFFICIENTS, FARKAS, lambdas=())
    w = _free_direction([neg(g) for g in gens], [(v, Fraction(-1))], d)
    assert w is not None, "Farkas alternative must hold"
    return False, ConeWitness(SEPARATING, FARKAS, direction=w)


def relint_member(v: Sequence, gens: Sequence[Sequence]) -> tuple[bool, ConeWitness]:
    """Is ``v`` a strictly positive combination of ``gens``?

    Solved as: maximize ``delta`` with ``sum lam_i g_i = v``,
    ``lam_i >= delta``, ``0 <= delta <= 1``; a member iff the optimum is
    positive. On failure the direction certifies that ``{g_i} + {-v}`` has
    no strictly positive vanishing combination.
    """
    v = vec(v)
    gens = [vec(g) for g in gens]
    d = _check_dims(gens + [v])
    m = len(gens)
    if m == 0:
        if is_zero(v):
            return True, ConeWitness(COEFFICIENTS, STIEMKE, lambdas=())
    else:
        total = combination([1] * m, gens, d)
        A_eq = [[g[r] for g in gens] + [total[r]] for r in range(d)]
        res = lp.solve([0] * m + [1], A_eq, v, [[0] * m + [1]], [1])
        if res.status == lp.OPTIMAL and res.value > 0:
            delta = res.x[m]
            lam = tuple(res.x[i] + delta for i in range(m))
            return True, ConeWitness(COEFFICIENTS, STIEMKE, lambdas=lam)
    w = stiemke_direction(gens + [neg(v)], d)
    assert w is not None, "Stiemke alternative must hold"
    return False, ConeWitness(SEPARATING, STIEMKE, direction=w)


@dataclass(frozen=True)
class ContainmentWitness:
    """Why ``relint(cone(gens2))`` is or is not inside ``relint(cone(gens1))``.

    ``generator_witnesses`` are the cone-membership certificates of each
    generator of the smaller cone (possibly truncated at the first failure);
    ``relint_point`` is the sum of those generators and ``relint_witness`` its
    relative-interior certificate against ``gens1``.
    """

    generator_witnesses: tuple
    relint_point: Optional[Vector]
    relint_witness: Optional[ConeWitness]
    failing_generator: Optional[int] = None

    def check(self, gens2: Sequence[Sequence], gens1: Sequence[Sequence]) -> bool:
        gens2 = [vec(g) for g in gens2]
        for g, wit in zip(gens2, self.generator_witnesses):
            if not wit.check(g, gens1):
                return False
        if self.failing_generator is not None:
            return not self.generator_witnesses[self.failing_generator].holds
        if len(self.generator_witnesses) != len(gens2) or self.relint_witness is None:
            return False
        return self.relint_witness.check(self.relint_point, gens1)


def relint_contained(gens2: Sequence[Sequence], gens1: Sequence[Sequence], d: Optional[int] = None) -> tuple[bool, ContainmentWitness]:
    """Decide ``relint(cone(gens2)) <= relint(cone(gens1))``.

    Holds iff every generator of the first cone lies in the second and one
    relative-interior point of the first (the generator sum) lies in the
    relative interior of the second.
    """
    gens2 = [vec(g) for g in gens2]
    gens1 = [vec(g) for g in gens1]
    d = _check_dims(gens1 + gens2, d)
    member_wits = []
    for i, g in enumerate(gens2):
        ok, wit = cone_member(g, gens1)
        member_wits.append(wit)
        if not ok:
            return False, ContainmentWitness(tuple(member_wits), None, None, failing_generator=i)
    point = combination([1] * len(gens2), gens2, d) if gens2 else zeros(d)
    ok, wit = relint_member(point, gens1)
    return ok, ContainmentWitness(tuple(member_wits), point, wit)


@dataclass(frozen=True)
class IntersectionWitness:
    """Common relative-interior point with its two positive representations,
    or a direction ``w`` with ``w.g1 <= 0``, ``w.g2 >= 0``, one strict."""

    point: Optional[Vector] = None
    lambdas1: Optional[tuple] = None
    lambdas2: Optional[tuple] = None
    direction: Optional[Vector] = None

    def check(self, gens1: Sequence[Sequence], gens2: Sequence[Sequence]) -> bool:
        gens1 = [vec(g) for g in gens1]
        gens2 = [vec(g) for g in gens2]
        if self.point is not None:
            d = len(self.point)
            return (
                all(x > 0 for x in self.lambdas1)
                and all(x > 0 for x in self.lambdas2)
                and len(self.lambdas1) == len(gens1)
                and len(self.lambdas2) == len(gens2)
                and combination(self.lambdas1, gens1, d) == self.point
                and combination(self.lambdas2, gens2, d) == self.point
            )
        w = self.direction
        dots = [dot(w, g) for g in gens1] + [-dot(w, g) for g in gens2]
        return all(x <= 0 for x in dots) and any(x < 0 for x in dots)


def relint_intersect(gens1: Sequence[Sequence], gens2: Sequence[Sequence], d: Optional[int] = None) -> tuple[bool, IntersectionWitness]:
    """Decide whether the relative interiors of two cones meet."""
    gens1 = [vec(g) for g in gens1]
    gens2 = [vec(g) for g in gens2]
    d = _check_dims(gens1 + gens2, d)
    if not gens1 and not gens2:
        return True, IntersectionWitness(point=zeros(d), lambdas1=(), lambdas2=())
    combined = gens1 + [neg(g) for g in gens2]
    lam = positive_kernel(combined, d)
    if lam is not None:
        l1, l2 = lam[: len(gens1)], lam[len(gens1):]
        point = combination(l1, gens1, d) if gens1 else zeros(d)
        return True, IntersectionWitness(point=point, lambdas1=tuple(l1), lambdas2=tuple(l2))
    w = stiemke_direction(combined, d)
    assert w is not None
    return False, IntersectionWitness(direction=w)


def on_relative_hull_boundary(p: Sequence, points: Sequence[Sequence]) -> bool:
    """True iff ``p`` is not in the relative interior of ``conv(points)``.

    A single point is treated as its own boundary.
    """
    p = vec(p)
    distinct = list(dict.fromkeys(vec(q) for q in points))
    _check_dims(distinct + [p])
    if p not in distinct:
        raise PointNotInSet(f"{show(p)} is not one of the given points")
    if len(distinct) == 1:
        return True
    return positive_kernel([sub(q, p) for q in distinct], len(p)) is None


def sign_vector_feasible(directions: Sequence[Sequence], signs: Sequence[int]) -> Optional[Vector]:
    """Nonzero ``w`` with ``sign(w.d_k) == signs[k]`` for every k, or ``None``.

    Strict signs are scaled to ``>= 1`` / ``<= -1``, which is harmless for a
    homogeneous system. When every sign is zero a nonzero ``w`` is sought by
    also fixing one coordinate. Used as a brute-force cross-check for the
    arrangement enumeration.
    """
    dirs = [vec(u) for u in directions]
    d = _check_dims(dirs)
    le, eq = [], []
    for u, s in zip(dirs, signs):
        if s > 0:
            le.append((neg(u), Fraction(-1)))
        elif s < 0:
            le.append((u, Fraction(-1)))
        else:
            eq.append((u, Fraction(0)))
    attempts = [[]] if le else [[(tuple(Fraction(int(i == k)) for i in range(d)), s)] for k in range(d) for s in (1, -1)]
    for extra in attempts:
        A_ub = [list(a) + [-x for x in a] for a, _ in le]
        b_ub = [b for _, b in le]
        A_eq = [list(a) + [-x for x in a] for a, _ in eq + extra]
        b_eq = [b for _, b in eq + extra]
        res = lp.solve([0] * (2 * d), A_eq, b_eq, A_ub, b_ub)
        if res.status == lp.OPTIMAL:
            return tuple(res.x[k] - res.x[d + k] for k in range(d))
    return None
