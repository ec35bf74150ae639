"""Exact vector and matrix helpers over the rationals.

Vectors are plain tuples of :class:`fractions.Fraction`. Nothing here ever
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, a Fraction or a 'p/q' string")
    return Fraction(x)


def vec(values: Iterable) -> Vector:
    return tuple(as_fraction(x) for x in values)


def show(v: Sequence) -> str:
    """``(1, 3/2)`` rather than a tuple of Fraction reprs."""
    return "(" + ", ".join(str(x) for x in v) + ")"


def zeros(d: int) -> Vector:
    return (Fraction(0),) * d


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Sequence) -> Vector:
    return tuple(-a for a in u)


def scale(c, u: Sequence) -> Vector:
    return tuple(c * a for a in u)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def combination(coeffs: Sequence, vectors: Sequence[Sequence], d: int) -> Vector:
    """Return sum_i coeffs[i] * vectors[i] in dimension ``d``."""
    out = [Fraction(0)] * d
    for c, v in zip(coeffs, vectors):
        if c:
            for k in range(d):
                out[k] += c * v[k]
    return tuple(out)


def integer_direction(u: Sequence) -> tuple[int, ...]:
    """Smallest integer vector that is a positive multiple of ``u``."""
    u = vec(u)
    den = 1
    for a in u:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in u]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns of a rational matrix."""
    m = [list(vec(r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [a / p for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : row . x = 0 for every row}."""
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def independent_subset(vectors: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    chosen: list[int] = []
    basis_rows: list[Vector] = []
    current = 0
    for i, v in enumerate(vectors):
        trial = basis_rows + [vec(v)]
        r = rank(trial)
        if r > current:
            chosen.append(i)
            basis_rows = trial
            current = r
    return chosen
