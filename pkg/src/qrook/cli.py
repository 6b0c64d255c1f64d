"""Batch command-line front-end.

Subcommands: tableaux, rep, verify, bratteli, dims, schurweyl,
semisimple.  All numeric output is exact strings (integers, fractions,
polynomials in q); output is deterministic for a fixed invocation, and
the exit code is 0 exactly when every requested check passes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import InvalidArgument
from .presentations import (
    algebra_dimension,
    projector_matrices,
    relations_A_algebra,
    relations_Ak_presentation,
    relations_Bprime,
    relations_cyclotomic,
    relations_rook,
    semisimple_A,
    semisimple_cyclotomic,
    semisimple_rook,
    verify,
)
from .qfield import RatFunc, as_ratfunc
from .rook import enumerate_rook, generators_q1, rook_cardinality
from .seminormal import (
    calibrated_skew_module,
    cyclotomic_module,
    shifted_skew_module,
)
from .shapes import (
    FAMILY_A_QUOTIENT,
    FAMILY_TYPE_B,
    bratteli,
    count_standard_tableaux,
    enumerate_standard_tableaux,
    graph_to_json,
    index_set_A,
    parse_multipartition,
    parse_skew,
    tableau_to_json,
)
from .tensor import (
    GradedBasis,
    centralizer_dimension,
    phiP,
    predicted_centralizer_dimension,
    verify_phiP,
)


def parse_u_list(spec: str):
    """Comma-separated exact values: integers, fractions, or q-power
    expressions like ``2*q^2``."""
    return tuple(as_ratfunc(part.strip()) for part in spec.split(","))


def parse_q(spec: str):
    """'symbolic' -> None, otherwise an exact rational."""
    if spec == "symbolic":
        return None
    try:
        return Fraction(spec)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidArgument(f"bad q value {spec!r}") from exc


def _emit(payload, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True)
    return payload


def cmd_tableaux(args) -> tuple:
    if args.multi:
        shape = parse_multipartition(args.multi)
    else:
        shape = parse_skew(args.skew)
    tabs = enumerate_standard_tableaux(shape)
    return _emit([tableau_to_json(t) for t in tabs]), 0


def cmd_rep(args) -> tuple:
    if args.multi:
        if args.u is None:
            raise InvalidArgument("--multi requires --u")
        rep = cyclotomic_module(parse_multipartition(args.multi), parse_u_list(args.u))
    elif args.skew:
        rep = calibrated_skew_module(parse_skew(args.skew), args.k)
    else:
        if args.k is None or args.d is None or args.u1 is None:
            raise InvalidArgument("shifted module requires --k, --d, --u1")
        rep = shifted_skew_module(args.k, args.d, as_ratfunc(args.u1))
    return _emit(rep.to_json()), 0


def _verify_family(family: str, k: int, u, q0):
    """Run the family's relation suite over every two-component module
    with a one-row first component; returns (payload, passed)."""
    if family == "rook" and q0 is not None:
        report = verify(generators_q1(k), relations_rook(k), q0=q0)
        return report.to_json(), report.passed
    if u is None:
        u = (as_ratfunc(0), as_ratfunc(1))
    if family == "rook":
        u = (as_ratfunc(0), as_ratfunc(1))
    modules = {}
    passed = True
    for shape in index_set_A(k):
        rep = cyclotomic_module(shape, u)
        if family == "rook":
            rels = relations_rook(k)
            asg = projector_matrices(rep.matrices, k)
        elif family == "Ak":
            rels = relations_Ak_presentation(k)
            asg = rep.matrices
        elif family == "cyclo":
            rels = relations_cyclotomic(k, u)
            asg = rep.matrices
        elif family == "aAlg":
            if len(u) != 2:
                raise InvalidArgument("aAlg needs exactly two u values")
            rels = relations_A_algebra(k, u[0], u[1])
            asg = rep.matrices
        elif family == "Bprime":
            rels = relations_Bprime(k)
            asg = rep.matrices
        else:
            raise InvalidArgument(f"unknown family {family!r}")
        report = verify(asg, rels, q0=q0)
        modules[json.dumps(shape)] = report.to_json()
        passed = passed and report.passed
    return {"passed": passed, "modules": modules}, passed


def cmd_verify(args) -> tuple:
    q0 = parse_q(args.q)
    u = parse_u_list(args.u) if args.u else None
    payload, passed = _verify_family(args.family, args.k, u, q0)
    return _emit(payload), 0 if passed else 1


def cmd_bratteli(args) -> tuple:
    family = FAMILY_TYPE_B if args.family == "B" else FAMILY_A_QUOTIENT
    graph = bratteli(args.levels, family)
    if args.format == "dot":
        return graph.to_dot(), 0
    return _emit(graph_to_json(graph)), 0


def cmd_dims(args) -> tuple:
    table = {}
    ok = True
    for k in range(1, args.rook + 1):
        by_formula = rook_cardinality(k)
        by_enum = len(enumerate_rook(k)) if k <= 4 else None
        by_squares = sum(
            count_standard_tableaux(s) ** 2 for s in index_set_A(k)
        )
        entry = {"formula": by_formula, "tableau_squares": by_squares}
        if by_enum is not None:
            entry["enumeration"] = by_enum
            ok = ok and by_enum == by_formula
        ok = ok and by_squares == by_formula
        table[str(k)] = entry
    payload = {"agree": ok, "dimensions": table}
    return _emit(payload), 0 if ok else 1


def cmd_schurweyl(args) -> tuple:
    basis = GradedBasis(tuple(int(x) for x in args.m.split(",")))
    u = parse_u_list(args.u)
    reports = verify_phiP(args.k, basis, u)
    payload = {
        "passed": reports["passed"],
        "cyclotomic": reports["cyclotomic"].to_json(),
    }
    if "quotient" in reports:
        payload["quotient"] = reports["quotient"].to_json()
    if "rook_identity" in reports:
        payload["rook_identity"] = reports["rook_identity"]
    predicted = predicted_centralizer_dimension(args.k, basis)
    actual = algebra_dimension(phiP(args.k, basis, u))
    payload["centralizer"] = {
        "dimension": actual,
        "predicted": predicted,
        "agree": actual == predicted,
    }
    ok = payload["passed"] and payload["centralizer"]["agree"]
    return _emit(payload), 0 if ok else 1


def cmd_semisimple(args) -> tuple:
    q0 = parse_q(args.q)
    if args.family == "rook":
        result = semisimple_rook(args.k, q0=q0)
    elif args.family == "cyclo":
        result = semisimple_cyclotomic(parse_u_list(args.u), args.k, q0=q0)
    elif args.family == "aAlg":
        u = parse_u_list(args.u)
        if len(u) != 2:
            raise InvalidArgument("aAlg needs exactly two u values")
        result = semisimple_A(u[0], u[1], args.k, q0=q0)
    else:
        raise InvalidArgument(f"unknown family {args.family!r}")
    payload = {"family": args.family, "k": args.k, "semisimple": result}
    return _emit(payload), 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="qrook")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tableaux", help="enumerate standard tableaux")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--multi", help='multipartition, e.g. "[[2],[1]]"')
    g.add_argument("--skew", help='skew shape, e.g. "[2,1]/[1]"')
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("rep", help="export a seminormal module")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--multi")
    g.add_argument("--skew")
    p.add_argument("--u", help="comma-separated exact parameters")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--u1")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("verify", help="run a relation suite on modules")
    p.add_argument(
        "--family",
        required=True,
        choices=["rook", "Ak", "cyclo", "aAlg", "Bprime"],
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--u")
    p.add_argument("--q", default="symbolic")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bratteli", help="export a branching graph")
    p.add_argument("--family", required=True, choices=["B", "A"])
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--format", default="json", choices=["json", "dot"])
    p.set_defaults(func=cmd_bratteli)

    p = sub.add_parser("dims", help="dimension tables")
    p.add_argument("--rook", type=int, required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("schurweyl", help="tensor-space action report")
    p.add_argument("--m", required=True, help="graded dimensions, e.g. 1,2")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--q", default="symbolic")
    p.set_defaults(func=cmd_schurweyl)

    p = sub.add_parser("semisimple", help="semisimplicity predicates")
    p.add_argument(
        "--family", required=True, choices=["rook", "cyclo", "aAlg"]
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--u")
    p.add_argument("--q", default="symbolic")
    p.set_defaults(func=cmd_semisimple)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        output, code = args.func(args)
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
