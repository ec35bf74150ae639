"""Exact planar convex hulls with every collinear boundary point kept on its face."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import vec


def orient(a: Sequence, b: Sequence, c: Sequence):
    """Twice the signed area of ``abc``; positive for a counterclockwise turn."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


@dataclass(frozen=True)
class Hull2D:
    vertices: tuple  # counterclockwise, no collinear vertices
    faces: tuple  # each face: the points on one side, ordered from one end to the other

    def faces_of(self, p: Sequence) -> list:
        p = vec(p)
        return [f for f in self.faces if p in f]

    def is_vertex(self, p: Sequence) -> bool:
        return vec(p) in self.vertices


def convex_hull(points: Sequence[Sequence]) -> Hull2D:
    """Monotone-chain hull. Degenerate inputs give one face holding every point."""
    pts = sorted(dict.fromkeys(vec(p) for p in points))
    if any(len(p) != 2 for p in pts):
        raise ValueError("points must be two-dimensional")
    if len(pts) <= 2 or all(orient(pts[0], pts[-1], p) == 0 for p in pts):
        ends = (pts[0], pts[-1]) if len(pts) > 1 else (pts[0],)
        return Hull2D(ends, (tuple(pts),))

    def chain(seq):
        out: list = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    verts = lower[:-1] + upper[:-1]
    faces = []
    for a, b in zip(verts, verts[1:] + verts[:1]):
        on = [p for p in pts if orient(a, b, p) == 0]
        key = (b[0] - a[0], b[1] - a[1])
        on.sort(key=lambda p: (p[0] - a[0]) * key[0] + (p[1] - a[1]) * key[1])
        faces.append(tuple(on))
    return Hull2D(tuple(verts), tuple(faces))


def on_boundary(p: Sequence, hull: Hull2D) -> bool:
    return bool(hull.faces_of(p))
