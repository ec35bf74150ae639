"""Mass-action polynomial vector fields.

A field is stored in canonical form: a sorted tuple of
``(exponent, coefficient)`` pairs where the monomial is ``x**exponent`` and
the coefficient is a vector; zero coefficients never appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .egraph import EGraph, as_rates
from .errors import DimensionMismatch, NonIntegerExponentAtEvaluation, RateLengthMismatch
from .linalg import Vector, as_fraction, independent_subset, is_zero, show, vec, zeros


@dataclass(frozen=True)
class VectorField:
    dim: int
    terms: tuple  # ((exponent, coefficient), ...) sorted by exponent

    @classmethod
    def from_terms(cls, dim: int, terms: Mapping | Iterable) -> "VectorField":
        """Canonicalize: sum coefficients per exponent, drop zero terms, sort."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for exp, coeff in items:
            exp, coeff = vec(exp), vec(coeff)
            if len(exp) != dim or len(coeff) != dim:
                raise DimensionMismatch(f"term {show(exp)}: {show(coeff)} is not {dim}-dimensional")
            prev = acc.get(exp)
            acc[exp] = coeff if prev is None else tuple(a + b for a, b in zip(prev, coeff))
        return cls(dim, tuple(sorted((e, c) for e, c in acc.items() if not is_zero(c))))

    @property
    def exponents(self) -> tuple:
        return tuple(e for e, _ in self.terms)

    def coefficient(self, exponent: Sequence) -> Vector:
        exponent = vec(exponent)
        for e, c in self.terms:
            if e == exponent:
                return c
        return zeros(self.dim)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def scaled(self, a) -> "VectorField":
        a = as_fraction(a)
        return VectorField.from_terms(self.dim, [(e, tuple(a * x for x in c)) for e, c in self.terms])

    def __add__(self, other: "VectorField") -> "VectorField":
        if self.dim != other.dim:
            raise DimensionMismatch("fields of different dimension")
        return VectorField.from_terms(self.dim, list(self.terms) + list(other.terms))

    def is_zero(self) -> bool:
        return not self.terms


def field_from_reactions(dim: int, reactions: Sequence[tuple[Sequence, Sequence]], rates: Sequence) -> VectorField:
    """Sum of ``k x^s (t - s)`` over raw reactions (parallel reactions allowed)."""
    if len(reactions) != len(rates):
        raise RateLengthMismatch(f"{len(rates)} rates for {len(reactions)} reactions")
    terms = []
    for (s, t), k in zip(reactions, rates):
        s, t, k = vec(s), vec(t), as_fraction(k)
        terms.append((s, tuple(k * (b - a) for a, b in zip(s, t))))
    return VectorField.from_terms(dim, terms)


def generate_field(G: EGraph, K) -> VectorField:
    K = as_rates(K)
    if len(K) != len(G.edges):
        raise RateLengthMismatch(f"{len(K)} rates for {len(G.edges)} edges")
    terms = [(G.source(i), tuple(k * x for x in G.reaction_vector(i))) for i, k in enumerate(K)]
    return VectorField.from_terms(G.dim, terms)


def fields_equal(f: VectorField, g: VectorField) -> bool:
    if f.dim != g.dim:
        raise DimensionMismatch(f"fields of dimension {f.dim} and {g.dim}")
    return f.terms == g.terms


def _power(base: Fraction, exp: Fraction) -> Fraction:
    if exp.denominator == 1:
        return base ** int(exp)  # Fraction(0) ** 0 == 1
    if base == 1:
        return Fraction(1)
    raise NonIntegerExponentAtEvaluation(f"{base} ** {exp} is not rational in general")


def monomial(x: Sequence, exponent: Sequence) -> Fraction:
    out = Fraction(1)
    for base, e in zip(x, exponent):
        out *= _power(base, e)
    return out


def evaluate_field(f: VectorField, x: Sequence) -> Vector:
    x = vec(x)
    if len(x) != f.dim:
        raise DimensionMismatch(f"point {show(x)} is not {f.dim}-dimensional")
    if any(c < 0 for c in x):
        raise ValueError("mass-action fields are evaluated on the nonnegative orthant")
    out = [Fraction(0)] * f.dim
    for exp, coeff in f.terms:
        m = monomial(x, exp)
        if m:
            for k in range(f.dim):
                out[k] += m * coeff[k]
    return tuple(out)


def stoichiometric_subspace(G: EGraph) -> list:
    """A basis of the span of the reaction vectors, taken from the vectors themselves."""
    vs = G.reaction_vectors
    return [vs[i] for i in independent_subset(vs)]
