"""Line-oriented text format for reaction networks.

::

    # comment
    species: X1 X2
    X1 <-> X2 , k = 1, 1
    0 -> 2 X1 , k = 1/2
    X1 -> X1 + X2 ; X1 -> 0

``0`` is the empty complex, coefficients and rates are exact rationals
(``p/q`` or integers) and ``;`` separates statements like a newline. Species
not named in a ``species:`` header are declared in order of first use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .egraph import EGraph, RateAssignment
from .errors import (
    CRNSyntaxError,
    DuplicateSpeciesDeclaration,
    EmptyNetwork,
    InvalidRate,
    MissingRate,
    NegativeCoefficient,
)

_TOKEN = re.compile(
    r"\s*(?:(?P<arrow><->|->)|(?P<rational>-?\d+(?:/\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<punct>[+,=:]))"
)


@dataclass(frozen=True)
class Reaction:
    lhs: tuple  # ((species, coefficient), ...) with positive coefficients
    rhs: tuple
    reversible: bool
    rates: Optional[tuple]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class NetworkDocument:
    species_order: tuple
    reactions: tuple

    @property
    def has_rates(self) -> bool:
        return bool(self.reactions) and all(r.rates is not None for r in self.reactions)


@dataclass
class _Token:
    kind: str
    text: str
    column: int


def _tokenize(text: str, line: int, offset: int) -> list[_Token]:
    out = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m:
            col = offset + pos + (len(stripped[pos:]) - len(stripped[pos:].lstrip())) + 1
            raise CRNSyntaxError(line, col, "a species, coefficient, '+', '->' or '<->'", text)
        kind = m.lastgroup
        out.append(_Token(kind, m.group(kind), offset + m.start(kind) + 1))
        pos = m.end()
    return out


class _Statement:
    def __init__(self, tokens: list[_Token], line: int, text: str):
        self.tokens = tokens
        self.i = 0
        self.line = line
        self.text = text

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def fail(self, expected: str):
        tok = self.peek()
        col = tok.column if tok else (self.tokens[-1].column + len(self.tokens[-1].text) if self.tokens else 1)
        raise CRNSyntaxError(self.line, col, expected, self.text)

    def take(self, kind: str, text: Optional[str] = None, expected: str = "") -> _Token:
        tok = self.peek()
        if tok is None or tok.kind != kind or (text is not None and tok.text != text):
            self.fail(expected or repr(text or kind))
        self.i += 1
        return tok

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == kind and (text is None or tok.text == text)


def _rational(tok: _Token) -> Fraction:
    return Fraction(tok.text)


def _complex(st: _Statement) -> tuple:
    tok = st.peek()
    if tok is not None and tok.kind == "rational" and tok.text == "0":
        nxt = st.tokens[st.i + 1] if st.i + 1 < len(st.tokens) else None
        if nxt is None or nxt.kind != "name":
            st.i += 1
            return ()
    terms: dict = {}
    while True:
        coeff = Fraction(1)
        if st.at("rational"):
            t = st.take("rational")
            coeff = _rational(t)
            if coeff < 0:
                raise NegativeCoefficient(f"line {st.line}, column {t.column}: coefficient {coeff} is negative")
        name = st.take("name", expected="a species name").text
        terms[name] = terms.get(name, Fraction(0)) + coeff
        if not st.at("punct", "+"):
            break
        st.take("punct", "+")
    return tuple((n, c) for n, c in terms.items() if c != 0)


def _reaction(st: _Statement) -> Reaction:
    first = st.peek()
    lhs = _complex(st)
    arrow = st.take("arrow", expected="'->' or '<->'")
    rhs = _complex(st)
    reversible = arrow.text == "<->"
    rates = None
    if st.at("punct", ","):
        st.take("punct", ",")
        k = st.take("name", "k", expected="'k'")
        st.take("punct", "=", expected="'='")
        rates = [_rational(st.take("rational", expected="a rational rate"))]
        if st.at("punct", ","):
            st.take("punct", ",")
            if not reversible:
                st.fail("end of reaction (one rate for '->')")
            rates.append(_rational(st.take("rational", expected="a rational rate")))
        if reversible and len(rates) < 2:
            raise MissingRate(f"line {st.line}, column {k.column}: '<->' needs a forward and a backward rate")
        if any(r <= 0 for r in rates):
            raise InvalidRate(f"line {st.line}: rate constants must be positive")
        rates = tuple(rates)
    if st.peek() is not None:
        st.fail("end of reaction")
    return Reaction(lhs, rhs, reversible, rates, st.line, first.column)


def _statements(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        offset = 0
        for part in body.split(";"):
            if part.strip():
                yield lineno, part, offset, raw
            offset += len(part) + 1


def parse(text: str, require_rates: bool = False) -> NetworkDocument:
    declared: list = []
    reactions = []
    for lineno, part, offset, raw in _statements(text):
        tokens = _tokenize(part, lineno, offset)
        st = _Statement(tokens, lineno, raw)
        if st.at("name", "species") and len(tokens) > 1 and tokens[1].kind == "punct" and tokens[1].text == ":":
            st.i = 2
            if st.peek() is None:
                st.fail("at least one species name")
            while st.peek() is not None:
                name = st.take("name", expected="a species name").text
                if name in declared:
                    raise DuplicateSpeciesDeclaration(f"line {lineno}: species {name} declared twice")
                declared.append(name)
            continue
        r = _reaction(st)
        for name, _ in r.lhs + r.rhs:
            if name not in declared:
                declared.append(name)
        reactions.append(r)
    if require_rates:
        for r in reactions:
            if r.rates is None:
                raise MissingRate(f"line {r.line}: reaction has no rate constant")
    return NetworkDocument(tuple(declared), tuple(reactions))


def _vector(cplx: tuple, index: dict, d: int) -> tuple:
    v = [Fraction(0)] * d
    for name, c in cplx:
        v[index[name]] += c
    return tuple(v)


def raw_reactions(doc: NetworkDocument, species: Optional[Sequence[str]] = None) -> tuple[list, Optional[list]]:
    """Coordinate pairs for every directed reaction, with rates when all are given."""
    species = list(species) if species is not None else list(doc.species_order)
    missing = [s for s in doc.species_order if s not in species]
    if missing:
        raise ValueError(f"species {missing} are not in the requested species list")
    index = {s: i for i, s in enumerate(species)}
    d = len(species)
    pairs, rates = [], []
    for r in doc.reactions:
        a, b = _vector(r.lhs, index, d), _vector(r.rhs, index, d)
        pairs.append((a, b))
        rates.append(r.rates[0] if r.rates else None)
        if r.reversible:
            pairs.append((b, a))
            rates.append(r.rates[1] if r.rates else None)
    return pairs, (rates if doc.has_rates else None)


def to_egraph(doc: NetworkDocument, species: Optional[Sequence[str]] = None,
              merge_parallel: bool = False) -> tuple[EGraph, Optional[RateAssignment]]:
    """The network with coordinates ordered by ``species`` (default: the document's).

    Repeated reactions are rejected unless ``merge_parallel`` is set and rates
    are present, in which case their rates add up.
    """
    species = list(species) if species is not None else list(doc.species_order)
    if not doc.reactions:
        raise EmptyNetwork("the document has no reactions")
    pairs, rates = raw_reactions(doc, species)
    if merge_parallel and rates is not None:
        merged: dict = {}
        for p, k in zip(pairs, rates):
            merged[p] = merged.get(p, 0) + k
        pairs, rates = list(merged), list(merged.values())
    G = EGraph.from_reactions(pairs, len(species))
    return G, (RateAssignment(tuple(rates)) if rates is not None else None)


def default_species(d: int) -> list[str]:
    return ["X"] if d == 1 else [f"X{i + 1}" for i in range(d)]


def _fmt_complex(cplx: tuple, species: Sequence[str]) -> str:
    coeffs = dict(cplx)
    parts = []
    for s in species:
        c = coeffs.get(s, 0)
        if c:
            parts.append(s if c == 1 else f"{c} {s}")
    return " + ".join(parts) if parts else "0"


def serialize(doc: NetworkDocument) -> str:
    lines = ["species: " + " ".join(doc.species_order)]
    for r in doc.reactions:
        line = f"{_fmt_complex(r.lhs, doc.species_order)} {'<->' if r.reversible else '->'} {_fmt_complex(r.rhs, doc.species_order)}"
        if r.rates is not None:
            line += " , k = " + ", ".join(str(k) for k in r.rates)
        lines.append(line)
    return "\n".join(lines) + "\n"


def document_from_egraph(G: EGraph, K=None, species: Optional[Sequence[str]] = None) -> NetworkDocument:
    species = list(species) if species is not None else default_species(G.dim)
    if len(species) != G.dim:
        raise ValueError(f"{len(species)} species names for dimension {G.dim}")
    reactions = []
    for i, (s, t) in enumerate(G.reactions()):
        lhs = tuple((n, c) for n, c in zip(species, s) if c)
        rhs = tuple((n, c) for n, c in zip(species, t) if c)
        rates = (Fraction(K[i]),) if K is not None else None
        reactions.append(Reaction(lhs, rhs, False, rates, i + 2, 1))
    return NetworkDocument(tuple(species), tuple(reactions))


def serialize_egraph(G: EGraph, K=None, species: Optional[Sequence[str]] = None) -> str:
    return serialize(document_from_egraph(G, K, species))
