"""Command-line front end.

Verbs: ``classify``, ``compare``, ``realize``, ``odes``, ``random``.
Exit codes: 0 when the answer is affirmative, 1 when it is negative or a
precondition fails, 2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .classify import ClassificationReport, classify, is_strongly_endotactic
from .egraph import EGraph, RateAssignment, is_source_only, is_weakly_reversible
from .equivalence import capacity_for_equivalence, dynamics_included
from .errors import CRNError, InternalInvariantBroken, MissingRate, ParseError, PostconditionFailed, PreconditionFailed, ReplacementInfeasible, ValidationError
from .generate import FLAG_CHOICES, random_with_constraints
from .massaction import VectorField, fields_equal, generate_field
from .parser import NetworkDocument, parse, serialize_egraph, to_egraph
from .realize import eliminate_zero_sources, ewr_realize_2d, make_source_only

SCHEMA_VERSION = "1"
EXIT_YES, EXIT_NO, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# -- JSON encoding ------------------------------------------------------------------

def q(x) -> str:
    return str(Fraction(x))


def qv(v) -> Optional[list]:
    return None if v is None else [q(x) for x in v]


def reaction_json(r) -> dict:
    return {"source": qv(r[0]), "target": qv(r[1])}


def cone_witness_json(w) -> Optional[dict]:
    if w is None:
        return None
    out = {"kind": w.kind, "alternative": w.alternative}
    if w.lambdas is not None:
        out["lambdas"] = qv(w.lambdas)
    if w.direction is not None:
        out["direction"] = qv(w.direction)
    return out


def field_json(f: VectorField) -> list:
    return [{"exponent": qv(e), "coefficient": qv(c)} for e, c in f.terms]


def _digest(path: str) -> dict:
    data = Path(path).read_bytes()
    return {"path": path, "sha256": hashlib.sha256(data).hexdigest()}


def report(command: str, paths: Sequence[str], result: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": [_digest(p) for p in paths],
        "result": result,
    }


# -- input helpers --------------------------------------------------------------------

def read_document(path: str) -> NetworkDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse(text)


def parse_rates(spec: str) -> list[Fraction]:
    """``"a=1,c=1/2,3"``: labels before ``=`` are informational only."""
    out = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        value = item.split("=", 1)[-1].strip()
        try:
            out.append(Fraction(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rate {item!r}") from exc
    return out


def load(path: str, rates: Optional[str] = None, need_rates: bool = False,
         species: Optional[Sequence[str]] = None) -> tuple[EGraph, Optional[RateAssignment], list]:
    doc = read_document(path)
    species = list(species) if species is not None else list(doc.species_order)
    G, K = to_egraph(doc, species)
    if rates is not None:
        K = RateAssignment(tuple(parse_rates(rates)))
        if len(K) != len(G.edges):
            raise InputError(f"{len(K)} rates given for {len(G.edges)} reactions")
    if need_rates and K is None:
        raise MissingRate(f"{path}: every reaction needs a rate (or pass --rates)")
    return G, K, species


def emit(args, payload: dict, human: str) -> None:
    text = json.dumps(payload, indent=2) + "\n" if args.json else human
    if getattr(args, "out", None) and args.command != "realize":
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _flag_name(name: str) -> str:
    return name.strip().replace("-", "_")


def parse_expectations(items: Sequence[str]) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise InputError(f"--expect needs FLAG=BOOL, got {item!r}")
        k, v = item.split("=", 1)
        v = v.strip().lower()
        if v not in ("true", "false"):
            raise InputError(f"--expect value must be true or false, got {v!r}")
        out[_flag_name(k)] = v == "true"
    return out


# -- commands -------------------------------------------------------------------------

def classification_json(G: EGraph, rep: ClassificationReport) -> dict:
    w = rep.witnesses
    wit: dict = {}
    for key in ("reversible", "weakly_reversible"):
        e = w[key]
        wit[key] = None if e is None else {"edge": reaction_json(G.reactions()[e])}
    wit["source_only"] = None if w["source_only"] is None else {"product_only_node": qv(w["source_only"])}
    wit["consistent"] = cone_witness_json(w["consistent"])
    for key in ("endotactic", "strongly_endotactic"):
        v = w[key]
        wit[key] = None if v is None else {"w": qv(v.w), "edge": reaction_json(G.reactions()[v.edge])}
    e = w["extremally_weakly_reversible"]
    wit["extremally_weakly_reversible"] = None if e is None else {"edge": reaction_json(e)}
    return {"flags": rep.flags(), "witnesses": wit}


def cmd_classify(args) -> int:
    expect = parse_expectations(args.expect)
    G, _, _ = load(args.file)
    rep = classify(G)
    result = classification_json(G, rep)
    flags = rep.flags()
    unknown = [k for k in expect if k not in flags]
    if unknown:
        raise InputError(f"unknown flag(s) in --expect: {', '.join(unknown)}")
    mismatches = {k: {"expected": v, "actual": flags[k]} for k, v in expect.items() if flags[k] != v}
    result["expectation_mismatches"] = mismatches
    human = "".join(f"{k}: {str(v).lower()}\n" for k, v in flags.items())
    for k, m in mismatches.items():
        human += f"MISMATCH {k}: expected {str(m['expected']).lower()}\n"
    emit(args, report("classify", [args.file], result), human)
    return EXIT_NO if mismatches else EXIT_YES


def _aligned(a: str, b: str):
    da, db = read_document(a), read_document(b)
    species = list(dict.fromkeys(list(da.species_order) + list(db.species_order)))
    return to_egraph(da, species)[0], to_egraph(db, species)[0], species


def cmd_compare(args) -> int:
    G_a, G_b, species = _aligned(args.file_a, args.file_b)
    if args.capacity:
        rep = capacity_for_equivalence(G_a, G_b)
        result = {
            "mode": "capacity",
            "species": species,
            "holds": rep.holds,
            "failing_source": qv(rep.failing_source),
            "shared_field": field_json(rep.shared_field) if rep.shared_field is not None else None,
            "witnesses": [
                {
                    "source": qv(s),
                    "point": qv(w.point),
                    "lambdas_a": qv(w.lambdas1),
                    "lambdas_b": qv(w.lambdas2),
                    "direction": qv(w.direction),
                }
                for s, w in rep.witnesses.items()
            ],
        }
        human = f"capacity: {str(rep.holds).lower()}\n"
    else:
        rep = dynamics_included(G_a, G_b)
        result = {
            "mode": "includes",
            "species": species,
            "holds": rep.holds,
            "failing_source": qv(rep.failing_source),
            "failing_reason": rep.failing_reason,
            "failing_point": qv(rep.failing_point),
            "failing_rates": qv(rep.failing_rates.rates) if rep.failing_rates is not None else None,
            "witnesses": [
                {
                    "source": qv(s),
                    "generators_a": [qv(g) for g in G_a.out_vectors(s)],
                    "generators_b": [qv(g) for g in G_b.out_vectors(s)],
                    "generator_witnesses": [cone_witness_json(x) for x in w.generator_witnesses],
                    "relint_point": qv(w.relint_point),
                    "relint_witness": cone_witness_json(w.relint_witness),
                }
                for s, w in rep.witnesses.items()
            ],
        }
        human = f"includes: {str(rep.holds).lower()}\n"
        if not rep.holds:
            human += f"failing source {qv(rep.failing_source)}: {rep.failing_reason}\n"
    emit(args, report("compare", [args.file_a, args.file_b], result), human)
    return EXIT_YES if rep.holds else EXIT_NO


def cmd_realize(args) -> int:
    which = "source-only" if args.source_only else "wr-eliminate" if args.wr_eliminate else "ewr2d"
    G, K, species = load(args.file, args.rates, need_rates=(which == "wr-eliminate"))
    try:
        if which == "source-only":
            res = make_source_only(G, K)
            post = {
                "source_only": is_source_only(res.graph),
                "dynamics_included": dynamics_included(G, res.graph).holds,
            }
        elif which == "wr-eliminate":
            res = eliminate_zero_sources(G, K)
            f = generate_field(G, K)
            post = {
                "weakly_reversible": is_weakly_reversible(res.graph),
                "sources_match_monomials": set(res.graph.sources) == set(f.exponents),
                "fields_equal": fields_equal(generate_field(res.graph, res.rate_map), f),
            }
        else:
            res = ewr_realize_2d(G)
            post = {
                "weakly_reversible": is_weakly_reversible(res.graph),
                "strongly_endotactic": is_strongly_endotactic(res.graph)[0],
                "dynamics_included": dynamics_included(G, res.graph).holds,
            }
    except PreconditionFailed as exc:
        result = {"realization": which, "ok": False, "error": type(exc).__name__,
                  "failed_flag": exc.flag, "message": str(exc)}
        emit(args, report("realize", [args.file], result), f"{type(exc).__name__}: {exc}\n")
        return EXIT_NO
    except (PostconditionFailed, InternalInvariantBroken, ReplacementInfeasible) as exc:
        result = {"realization": which, "ok": False, "error": type(exc).__name__, "message": str(exc)}
        emit(args, report("realize", [args.file], result), f"{type(exc).__name__}: {exc}\n")
        return EXIT_NO
    text = serialize_egraph(res.graph, res.rate_map, species)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    result = {
        "realization": which,
        "ok": all(post.values()),
        "postconditions": post,
        "network": text,
        "reactions": [reaction_json(r) for r in res.graph.reactions()],
        "rates": qv(res.rate_map.rates) if res.rate_map is not None else None,
        "provenance": [
            {
                "kind": p.kind,
                "edge": reaction_json(p.edge),
                "parents": [reaction_json(r) for r in p.parents],
                "coefficients": qv(p.coefficients),
            }
            for p in res.provenance
        ],
    }
    human = text if not args.out else "".join(f"{k}: {str(v).lower()}\n" for k, v in post.items())
    emit(args, report("realize", [args.file], result), human)
    return EXIT_YES if result["ok"] else EXIT_NO


# -- field printing -------------------------------------------------------------------

def _var(name: str, latex: bool) -> str:
    v = name.lower()
    if latex:
        head = v.rstrip("0123456789")
        tail = v[len(head):]
        return f"{head}_{{{tail}}}" if tail and head else v
    return v


def _coef(c: Fraction, latex: bool) -> str:
    if latex and c.denominator != 1:
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return str(c)


def _monomial(exp, species, latex: bool) -> str:
    parts = []
    for e, name in zip(exp, species):
        if e == 0:
            continue
        v = _var(name, latex)
        if e == 1:
            parts.append(v)
        elif latex:
            parts.append(f"{v}^{{{e}}}")
        else:
            parts.append(f"{v}^{e}" if e.denominator == 1 else f"{v}^({e})")
    return (" " if latex else "*").join(parts)


def field_lines(f: VectorField, species: Sequence[str], latex: bool = False) -> list[str]:
    """One ``dx/dt = ...`` line per species; terms by degree, then ``x1`` before ``x2``."""
    order = sorted(f.terms, key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))
    lines = []
    for i, name in enumerate(species):
        out = ""
        for exp, coeff in order:
            c = coeff[i]
            if c == 0:
                continue
            mono = _monomial(exp, species, latex)
            mag = abs(c)
            if not mono:
                body = _coef(mag, latex)
            elif mag == 1:
                body = mono
            else:
                body = f"{_coef(mag, latex)}{' ' if latex else '*'}{mono}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        lhs = f"\\frac{{d{_var(name, True)}}}{{dt}}" if latex else f"d{_var(name, False)}/dt"
        lines.append(f"{lhs} = {out or '0'}")
    return lines


def cmd_odes(args) -> int:
    G, K, species = load(args.file, args.rates, need_rates=True)
    f = generate_field(G, K)
    lines = field_lines(f, species, latex=args.latex)
    result = {"species": species, "field": field_json(f), "lines": lines}
    emit(args, report("odes", [args.file], result), "\n".join(lines) + "\n")
    return EXIT_YES


def cmd_random(args) -> int:
    G = random_with_constraints(args.dim, args.sources, args.seed, args.require or (), budget=args.budget)
    text = serialize_egraph(G)
    result = {"dim": args.dim, "sources": len(G.sources), "seed": args.seed,
              "require": list(args.require or ()), "network": text}
    emit(args, report("random", [], result), text)
    return EXIT_YES


# -- entry point ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="crnet", description="Exact reaction network classification and realization.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="all classification flags with witnesses")
    c.add_argument("file")
    c.add_argument("--expect", action="append", metavar="FLAG=BOOL", help="exit 1 unless FLAG has this value")
    c.set_defaults(run=cmd_classify)

    c = sub.add_parser("compare", parents=[common], help="dynamics inclusion or capacity for equivalence")
    c.add_argument("file_a")
    c.add_argument("file_b")
    mode = c.add_mutually_exclusive_group(required=True)
    mode.add_argument("--includes", action="store_true", help="is every field of A also generated by B?")
    mode.add_argument("--capacity", action="store_true", help="can A and B generate a common field?")
    c.set_defaults(run=cmd_compare)

    c = sub.add_parser("realize", parents=[common], help="construct an equivalent network")
    c.add_argument("file")
    which = c.add_mutually_exclusive_group(required=True)
    which.add_argument("--source-only", action="store_true")
    which.add_argument("--wr-eliminate", action="store_true")
    which.add_argument("--ewr2d", action="store_true")
    c.add_argument("--rates", help="comma-separated rates in reaction order, e.g. a=1,b=1/2")
    c.set_defaults(run=cmd_realize)

    c = sub.add_parser("odes", parents=[common], help="print the mass-action ODEs")
    c.add_argument("file")
    c.add_argument("--rates")
    c.add_argument("--latex", action="store_true")
    c.set_defaults(run=cmd_odes)

    c = sub.add_parser("random", parents=[common], help="emit a seeded random network")
    c.add_argument("--dim", type=int, default=2)
    c.add_argument("--sources", type=int, default=4)
    c.add_argument("--require", action="append", choices=FLAG_CHOICES)
    c.add_argument("--budget", type=int, default=500, help="rejection-sampling attempts")
    c.set_defaults(run=cmd_random)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_YES
    try:
        return args.run(args)
    except (InputError, ParseError, ValidationError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except CRNError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_NO


if __name__ == "__main__":
    sys.exit(main())
