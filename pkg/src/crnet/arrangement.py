"""Sign cells of a central hyperplane arrangement.

Given nonzero directions ``D`` in R^d, a sign cell is a realizable vector
``(sign(w.d) for d in D)`` over nonzero ``w``. Every cell is the relatively
open region (a *chamber*) of the flat it spans, so the enumeration walks all
flats (intersections of the hyperplanes ``d^perp``) and lists the chambers of
each. Chambers of a flat ``U`` are recovered from the chambers of its
hyperplane sections: every chamber of ``U`` has a facet inside some
``U cap H_k``, and stepping off a point of that facet to either side of
``H_k`` lands in the chambers adjacent to it. Step sizes are computed
exactly, so all witnesses are integer vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import Vector, dot, integer_direction, rref, sign, vec


@dataclass(frozen=True)
class SignCell:
    signs: tuple
    witness: Vector

    def check(self, directions: Sequence[Sequence]) -> bool:
        return all(sign(dot(self.witness, vec(d))) == s for d, s in zip(directions, self.signs))


def _idot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _canonical(basis: list[tuple[int, ...]]) -> tuple:
    rows, _ = rref(basis)
    return tuple(integer_direction(r) for r in rows)


def _section(basis: tuple, normal: tuple) -> tuple:
    """Basis of ``{x in span(basis) : x . normal = 0}``, canonicalized."""
    a = [_idot(b, normal) for b in basis]
    p = next(i for i, x in enumerate(a) if x != 0)
    out = []
    for i, b in enumerate(basis):
        if i == p:
            continue
        out.append(tuple(a[p] * bi - a[i] * bp for bi, bp in zip(b, basis[p])))
    if not out:
        return ()
    return _canonical(out)


class _Arrangement:
    def __init__(self, normals: list[tuple[int, ...]], dim: int):
        self.normals = normals
        self.dim = dim
        self._chambers: dict = {}

    def cutting(self, basis: tuple) -> list[int]:
        return [j for j, n in enumerate(self.normals) if any(_idot(b, n) for b in basis)]

    def signature(self, w) -> tuple:
        return tuple((_idot(w, n) > 0) - (_idot(w, n) < 0) for n in self.normals)

    def chambers(self, basis: tuple) -> list[tuple[int, ...]]:
        """One witness per open region of the flat spanned by ``basis``."""
        if basis in self._chambers:
            return self._chambers[basis]
        cut = self.cutting(basis)
        if not cut:
            result = [basis[0]]
        elif len(basis) == 1:
            b = basis[0]
            result = [b, tuple(-x for x in b)]
        else:
            found: dict = {}
            for k in cut:
                nk = self.normals[k]
                b = next(b for b in basis if _idot(b, nk))
                for wf in self.chambers(_section(basis, nk)):
                    t = 1
                    for j in cut:
                        wd = abs(_idot(wf, self.normals[j]))
                        if wd:
                            t = max(t, abs(_idot(b, self.normals[j])) // wd + 1)
                    for s in (1, -1):
                        w = tuple(t * x + s * y for x, y in zip(wf, b))
                        found.setdefault(self.signature(w), w)
            result = list(found.values())
        self._chambers[basis] = result
        return result

    def flats(self) -> list[tuple]:
        top = tuple(tuple(int(i == k) for i in range(self.dim)) for k in range(self.dim))
        seen = {top: None}
        queue = [top]
        while queue:
            basis = queue.pop()
            if len(basis) == 1:
                continue
            for k in self.cutting(basis):
                sub = _section(basis, self.normals[k])
                if sub and sub not in seen:
                    seen[sub] = None
                    queue.append(sub)
        return list(seen)


def enumerate_sign_cells(directions: Sequence[Sequence], dim: Optional[int] = None) -> list[SignCell]:
    """All realizable sign vectors of nonzero ``w`` against ``directions``.

    Each sign vector appears once, with an exact integer witness. Directions
    that are positive or negative multiples of each other share one
    hyperplane. The all-zero vector is included exactly when the directions
    do not span the ambient space.
    """
    D = [vec(d) for d in directions]
    if dim is None:
        if not D:
            raise ValueError("dimension is required for an empty direction set")
        dim = len(D[0])
    if any(len(d) != dim for d in D):
        raise ValueError("all directions must have the ambient dimension")
    if any(all(x == 0 for x in d) for d in D):
        raise ValueError("directions must be nonzero")

    lines: dict = {}
    line_of = []
    for d in D:
        key = integer_direction(d)
        flip = 1
        if next(x for x in key if x != 0) < 0:
            key, flip = tuple(-x for x in key), -1
        idx = lines.setdefault(key, len(lines))
        line_of.append((idx, flip))
    arr = _Arrangement(list(lines), dim)

    cells: dict = {}
    for basis in arr.flats():
        for w in arr.chambers(basis):
            line_signs = arr.signature(w)
            signs = tuple(line_signs[i] * f for i, f in line_of)
            cells.setdefault(signs, w)
    return [SignCell(s, tuple(Fraction(x) for x in w)) for s, w in sorted(cells.items())]
