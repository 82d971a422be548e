"""Command-line front end.

Exit codes follow a CI-friendly contract: 0 means the requested identity or
certificate holds, 1 means the computation succeeded but the verdict is
negative (the report pinpoints the first failure), 2 means a usage or
feasibility error.  With ``--format json`` the report is a single
deterministic JSON document: identical configuration (including seeds)
produces byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__, jsonio, koszul, manin, mmt
from .algebras import (
    antisymmetrizer,
    dual_dims_closed_form,
    free_algebra,
    polynomial,
    quantum_space,
)
from .scalar import QQ

DEFAULT_MAX_AMBIENT = 10**7


class UsageError(Exception):
    pass


def make_algebra(args):
    spec = args.algebra
    if spec.startswith("file:"):
        path = spec[len("file:") :]
        try:
            with open(path) as fh:
                obj = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read algebra file: {exc}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed algebra JSON: {exc}")
        try:
            return jsonio.algebra_from_obj(obj)
        except (KeyError, ValueError, TypeError) as exc:
            raise UsageError(f"bad algebra JSON: {exc}")
    if args.n is None:
        raise UsageError("--n is required for built-in algebras")
    try:
        if spec == "poly":
            return polynomial(args.n)
        if spec == "antisym":
            if args.N is None:
                raise UsageError("--N is required for antisym")
            return antisymmetrizer(args.n, args.N)
        if spec == "qspace":
            q = Fraction(args.q) if args.q is not None else None
            return quantum_space(args.n, q=q)
        if spec == "free":
            return free_algebra(args.n)
    except ValueError as exc:
        raise UsageError(str(exc))
    raise UsageError(f"unknown algebra {spec!r}")


def load_matrix(args):
    if args.matrix is not None:
        text = args.matrix
        if text.startswith("file:"):
            path = text[len("file:") :]
            try:
                with open(path) as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read matrix file: {exc}")
        try:
            obj = json.loads(text)
            return jsonio.matrix_from_obj(obj, QQ)
        except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
            raise UsageError(f"malformed matrix JSON: {exc}")
    if args.random_seed is not None:
        if args.n is None:
            raise UsageError("--n is required with --random-seed")
        return mmt.random_rational_matrix(args.n, args.random_seed)
    raise UsageError("provide --matrix or --random-seed")


def config_obj(args, keys):
    cfg = {}
    for key in keys:
        value = getattr(args, key, None)
        cfg[key.replace("_", "-")] = value
    return cfg


def ambient_bound(args):
    if args.max_ambient is not None:
        return args.max_ambient
    env = os.environ.get("KOSZUL_MAX_AMBIENT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"bad KOSZUL_MAX_AMBIENT value {env!r}")
    return DEFAULT_MAX_AMBIENT


# ----------------------------------------------------------------------
# command handlers: return (report dict, verdict bool, text lines)


def cmd_info(args):
    A = make_algebra(args)
    D = args.max_degree
    dims = [A.dim_component(d) for d in range(D + 1)]
    dual_dims = [koszul.dual_component_dim(A, m) for m in range(D + 1)]
    report = {
        "label": A.label,
        "n": A.n,
        "N": A.N,
        "relation_count": len(A.relations),
        "relation_rank": A.ideal_rank(A.N),
        "parameters": list(A.field.parameters),
        "dims": dims,
        "dual_dims": dual_dims,
    }
    lines = [
        f"{A.label or 'algebra'}: n={A.n}, N={A.N}, "
        f"{len(A.relations)} relations spanning {report['relation_rank']}",
        f"dims A_d, d=0..{D}: {dims}",
        f"dims A!_m, m=0..{D}: {dual_dims}",
    ]
    return report, True, lines


def cmd_hilbert(args):
    A = make_algebra(args)
    coeffs = A.hilbert_series(args.max_degree).coeffs
    report = {"label": A.label, "coefficients": coeffs}
    return report, True, [f"H_A coefficients 0..{args.max_degree}: {coeffs}"]


def cmd_dual_dims(args):
    A = make_algebra(args)
    D = args.max_degree
    dims = [koszul.dual_component_dim(A, m) for m in range(D + 1)]
    report = {"label": A.label, "dual_dims": dims}
    verdict = True
    lines = [f"dims A!_m, m=0..{D}: {dims}"]
    if args.algebra == "antisym":
        closed = [dual_dims_closed_form(args.n, args.N, m) for m in range(D + 1)]
        verdict = closed == dims
        report["closed_form"] = closed
        report["matches_closed_form"] = verdict
        lines.append(f"closed form: {closed} ({'match' if verdict else 'MISMATCH'})")
    return report, verdict, lines


def cmd_admissible(args):
    if args.n is None or args.N is None:
        raise UsageError("--n and --N are required")
    try:
        res = koszul.admissible_identity_check(args.n, args.N, args.max_degree)
    except ValueError as exc:
        raise UsageError(str(exc))
    report = {
        "counts": res.counts,
        "inverse_coefficients": res.inverse_coeffs,
        "degree_rule_ok": res.degree_rule_ok,
        "last_nonzero_index": res.ell_max,
        "passed": res.passed,
    }
    lines = [
        f"admissible counts 0..{args.max_degree}: {res.counts}",
        f"inverse series:               {res.inverse_coeffs}",
        f"identity {'holds' if res.passed else 'FAILS'} up to degree {args.max_degree}",
    ]
    return report, res.passed, lines


def cmd_koszul_check(args):
    A = make_algebra(args)
    res = koszul.koszul_certificate(A, args.max_degree)
    report = res.to_obj()
    report["label"] = A.label
    if res.passed:
        lines = [
            f"{A.label}: certificate PASSES up to degree {args.max_degree} "
            "(degree-bounded evidence, not a proof of Koszulity)"
        ]
    else:
        m, ell = res.first_failure
        lines = [
            f"{A.label}: certificate FAILS first at total degree {m}, "
            f"homological degree {ell}"
        ]
    return report, res.passed, lines


def cmd_dvp_check(args):
    A = make_algebra(args)
    D = args.max_degree
    h = A.hilbert_series(D)
    rhs = koszul.dvp_rhs(A, D)
    product = h * rhs
    ok = product.is_one()
    report = {
        "label": A.label,
        "hilbert": h.coeffs,
        "alternating_dual_series": rhs.coeffs,
        "product": product.coeffs,
        "passed": ok,
    }
    lines = [
        f"H_A: {h.coeffs}",
        f"RHS: {rhs.coeffs}",
        f"duality identity {'holds' if ok else 'FAILS'} up to degree {D}",
    ]
    return report, ok, lines


def cmd_kmt_check(args):
    A = make_algebra(args)
    D = args.max_degree
    ambient = manin.kmt_ambient(A.n, D)
    bound = ambient_bound(args)
    if ambient > bound:
        raise UsageError(
            f"envelope ambient dimension n^(2D) = {ambient} exceeds the "
            f"guardrail {bound}; raise --max-ambient or KOSZUL_MAX_AMBIENT"
        )
    B = manin.build_end(A)
    res = manin.kmt_check(B, D)
    report = {
        "label": A.label,
        "max_degree": D,
        "passed": res.passed,
        "first_failure_degree": res.first_failure,
    }
    if manin.is_polynomial_presentation(A):
        report["determinant_convention"] = manin.ferm_convention(B, min(D, 4))
    lines = [
        f"{A.label}: character identity "
        f"{'holds' if res.passed else 'FAILS'} up to degree {D}"
    ]
    if not res.passed:
        lines.append(f"first failing degree: {res.first_failure}")
    return report, res.passed, lines


def cmd_mmt(args):
    if args.n is None:
        raise UsageError("--n is required")
    Z = load_matrix(args)
    if len(Z) != args.n:
        raise UsageError("matrix size does not match --n")
    res = mmt.mmt_check(args.n, Z, args.max_degree)
    report = {
        "n": args.n,
        "max_degree": args.max_degree,
        "matrix": jsonio.matrix_to_obj(Z),
        "passed": res.passed,
        "first_mismatch": _mismatch_obj(res),
    }
    lines = [_master_line("master identity", res, args.max_degree)]
    return report, res.passed, lines


def cmd_nmt(args):
    if args.n is None or args.N is None:
        raise UsageError("--n and --N are required")
    Z = load_matrix(args)
    if len(Z) != args.n:
        raise UsageError("matrix size does not match --n")
    try:
        res = mmt.nmt_check(args.n, args.N, Z, args.max_degree)
    except ValueError as exc:
        raise UsageError(str(exc))
    report = {
        "n": args.n,
        "N": args.N,
        "max_degree": args.max_degree,
        "matrix": jsonio.matrix_to_obj(Z),
        "passed": res.passed,
        "first_mismatch": _mismatch_obj(res),
    }
    lines = [_master_line(f"N={args.N} master identity", res, args.max_degree)]
    return report, res.passed, lines


def _mismatch_obj(res):
    if res.first_mismatch is None:
        return None
    exps, lhs, rhs = res.first_mismatch
    return {
        "exponents": list(exps),
        "lhs": str(lhs),
        "rhs": str(rhs),
    }


def _master_line(name, res, max_degree):
    if res.passed:
        return f"{name} holds exactly up to total degree {max_degree}"
    exps, lhs, rhs = res.first_mismatch
    return f"{name} FAILS at monomial {exps}: lhs={lhs}, rhs={rhs}"


def cmd_eq1(args):
    if args.n is None:
        raise UsageError("--n is required")
    values = {}
    ok = True
    for m in range(1, args.max_degree + 1):
        v = koszul.identity_eq1(args.n, m)
        values[str(m)] = v
        if v != 0:
            ok = False
    report = {"n": args.n, "values": values, "all_zero": ok}
    lines = [
        f"alternating binomial sums, m=1..{args.max_degree}: "
        f"{'all zero' if ok else f'NONZERO somewhere: {values}'}"
    ]
    return report, ok, lines


HANDLERS = {
    "info": cmd_info,
    "hilbert": cmd_hilbert,
    "dual-dims": cmd_dual_dims,
    "admissible": cmd_admissible,
    "koszul-check": cmd_koszul_check,
    "dvp-check": cmd_dvp_check,
    "kmt-check": cmd_kmt_check,
    "mmt": cmd_mmt,
    "nmt": cmd_nmt,
    "eq1": cmd_eq1,
}

CONFIG_KEYS = [
    "command",
    "algebra",
    "n",
    "N",
    "q",
    "max_degree",
    "matrix",
    "random_seed",
    "max_ambient",
    "format",
]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nkoszul",
        description="exact checks for N-homogeneous algebras and their duals",
    )
    parser.add_argument("--version", action="version", version=f"nkoszul {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in HANDLERS:
        p = sub.add_parser(name)
        p.add_argument("--algebra", default="poly",
                       help="poly | antisym | qspace | free | file:PATH")
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--N", type=int, default=None)
        p.add_argument("--q", default=None,
                       help="numeric quantum parameter (default: generic)")
        p.add_argument("--max-degree", type=int, default=6)
        p.add_argument("--matrix", default=None,
                       help="inline matrix JSON or file:PATH")
        p.add_argument("--random-seed", type=int, default=None)
        p.add_argument("--max-ambient", type=int, default=None,
                       help=f"guardrail on n^(2D) (default {DEFAULT_MAX_AMBIENT})")
        p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if args.max_degree < 0:
        print("error: --max-degree must be >= 0", file=sys.stderr)
        return 2
    try:
        report, verdict, lines = HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # precondition violations from the library surface as usage errors
        print(f"error: {exc}", file=sys.stderr)
        return 2
    document = {
        "tool": "nkoszul",
        "version": __version__,
        "config": config_obj(args, CONFIG_KEYS),
        "max_degree": args.max_degree,
        "report": report,
        "verdict": "holds" if verdict else "violated",
    }
    if args.format == "json":
        print(json.dumps(document, sort_keys=True, separators=(",", ":")))
    else:
        for line in lines:
            print(line)
    return 0 if verdict else 1


if __name__ == "__main__":
    sys.exit(main())
