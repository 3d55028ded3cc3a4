"""``galog`` command line entry point.

Exit codes: 0 success, 2 parse/usage error, 3 nonexistent result,
4 result carries log(0+) terms, 5 round-trip verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext
from typing import Sequence

import numpy as np

from galog import functions
from galog.branching import BranchParams
from galog.config import tolerance
from galog.core import AlgebraError, Multivector, NonInvertibleError, Signature, determinant, norm
from galog.exponential import exp, exp_series
from galog.extended import ExtendedMultivector
from galog.functions import NonRepresentableError
from galog.logarithm import LogResult, NonExistentLogError, log, log_series, min_sheet
from galog.cli.parser import MvSyntaxError, parse_mv, print_mv

EXIT_OK, EXIT_USAGE, EXIT_NONEXISTENT, EXIT_SINGULAR, EXIT_VERIFY = 0, 2, 3, 4, 5
ROUNDTRIP_THRESHOLD = 1e-8


class UsageError(Exception):
    pass


def _triple(text: str) -> tuple[float, float, float]:
    try:
        vals = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y,z but got {text!r}") from None
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma separated numbers, got {text!r}")
    return vals


def _positive(text: str) -> float:
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not val > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return val


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", default="cl30", choices=[s.value for s in Signature])
    common.add_argument("--branch", default="", help='integer constants, e.g. "c1p=0,c1m=0,c2p=0,c2m=0"')
    common.add_argument("--free-vec", type=_triple, help="free unit vector direction x,y,z")
    common.add_argument("--free-biv", type=_triple, help="free unit bivector direction x,y,z (e12,e13,e23)")
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--tol", type=_positive, help="zero tolerance for case dispatch")

    p = argparse.ArgumentParser(prog="galog", description="Multivector logarithms and functions in 3D Clifford algebras.")
    sub = p.add_subparsers(dest="op", required=True)

    def cmd(name, help_text, expr=True):
        s = sub.add_parser(name, parents=[common], help=help_text)
        if expr:
            s.add_argument("expr", help='multivector, e.g. "-2 + e1 + e23 - 3e123"')
        return s

    cmd("log", "principal logarithm").add_argument("--residual", action="store_true",
                                                   help="report the exp(log A) - A residual")
    cmd("exp", "exponential")
    cmd("pow", "power A^r = exp(r log A)").add_argument("--r", required=True, help="exponent, p/q or decimal")
    cmd("fn", "elementary function").add_argument("--name", required=True, choices=sorted(functions.FUNCTIONS))
    cmd("series-log", "power series logarithm").add_argument("--max-terms", type=int, default=4096)
    cmd("det", "determinant")
    cmd("norm", "determinant norm")
    rt = cmd("roundtrip", "randomised exp(log A) = A check", expr=False)
    rt.add_argument("--count", type=int, default=1000)
    rt.add_argument("--seed", type=int, required=True)
    cmd("min-sheet", "scan integer constants for the smallest-norm logarithm").add_argument("--cmax", type=int, default=2)
    return p


def _branch(args) -> BranchParams:
    try:
        b = BranchParams.parse(args.branch)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return b.with_directions(args.free_vec, args.free_biv)


def _coeffs(x) -> list[float]:
    return [float(v) for v in np.asarray(x, dtype=float)]


def _document(args, a: Multivector | None, branch: BranchParams) -> dict:
    doc = {"algebra": args.algebra, "op": args.op, "input": None if a is None else _coeffs(a.coeffs),
           "branch": branch.as_dict()}
    return doc


def _outcome(exists: bool, value=None, rows=(), family=None, **extra) -> dict:
    out = {"exists": exists, "coeffs": None, "lambda_coeffs": None, "case_row": [r.value for r in rows],
           "free_family": None if family is None else family.describe()}
    if isinstance(value, ExtendedMultivector):
        out["coeffs"] = _coeffs(value.finite.coeffs)
        out["lambda_coeffs"] = _coeffs(value.lam.coeffs)
    elif isinstance(value, Multivector):
        out["coeffs"] = _coeffs(value.coeffs)
        out["lambda_coeffs"] = [0.0] * 8
    out.update(extra)
    return out


def _text_value(value) -> str:
    if isinstance(value, ExtendedMultivector):
        if value.is_finite:
            return print_mv(value.finite)
        return f"{print_mv(value.finite)} + ({print_mv(value.lam)})*log(0+)"
    if isinstance(value, Multivector):
        return print_mv(value)
    return f"{value:.10g}"


def _log_doc(args, a, branch) -> tuple[dict, int]:
    res: LogResult = log(a, branch)
    doc = _document(args, a, branch)
    if not res.exists:
        doc["outcome"] = _outcome(False, rows=res.rows, reason=res.reason)
        return doc, EXIT_NONEXISTENT
    doc["outcome"] = _outcome(True, res.value, res.rows, res.family)
    if getattr(args, "residual", False) and res.value.is_finite:
        doc["residual"] = float(np.abs((exp_series(res.finite()) - a).coeffs).max())
    return doc, (EXIT_OK if res.value.is_finite else EXIT_SINGULAR)


def _roundtrip(args, branch) -> tuple[dict, int]:
    if args.count <= 0:
        raise UsageError("--count must be positive")
    sig = Signature.parse(args.algebra)
    rng = np.random.default_rng(args.seed)
    residuals, rejected, singular = [], 0, 0
    while len(residuals) < args.count:
        a = Multivector(rng.uniform(-10.0, 10.0, 8), sig)
        res = log(a, branch)
        if not res.exists:
            rejected += 1
            continue
        if not res.value.is_finite:
            singular += 1
            continue
        back = exp_series(res.finite())
        residuals.append(float(np.abs((back - a).coeffs).max() / a.scale()))
    drawn = args.count + rejected + singular
    r = np.asarray(residuals)
    doc = _document(args, None, branch)
    doc.update({
        "seed": args.seed, "count": args.count, "drawn": drawn, "rejected": rejected, "singular": singular,
        "rejection_rate": rejected / drawn, "max_residual": float(r.max()), "mean_residual": float(r.mean()),
        "threshold": ROUNDTRIP_THRESHOLD,
    })
    return doc, (EXIT_OK if r.max() < ROUNDTRIP_THRESHOLD else EXIT_VERIFY)


def _run(args) -> tuple[dict, int]:
    branch = _branch(args)
    if args.op == "roundtrip":
        return _roundtrip(args, branch)
    a = parse_mv(args.expr, args.algebra)
    doc = _document(args, a, branch)
    op = args.op
    if op == "log":
        return _log_doc(args, a, branch)
    if op == "exp":
        doc["outcome"] = _outcome(True, exp(a))
    elif op == "pow":
        doc["exponent"] = args.r
        try:
            doc["outcome"] = _outcome(True, functions.power(a, args.r, branch))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif op == "fn":
        fn = functions.FUNCTIONS[args.name]
        doc["function"] = args.name
        value = fn(a) if args.name in functions.FORWARD else fn(a, branch)
        doc["outcome"] = _outcome(True, value)
    elif op == "series-log":
        if args.max_terms < 1:
            raise UsageError("--max-terms must be positive")
        s = log_series(a, args.max_terms)
        doc["outcome"] = _outcome(True, s.value, converged=s.converged, terms=s.terms, norm_b=s.norm_b)
    elif op == "det":
        doc["outcome"] = _outcome(True, value=None, value_scalar=determinant(a))
    elif op == "norm":
        doc["outcome"] = _outcome(True, value=None, value_scalar=norm(a))
    elif op == "min-sheet":
        if args.cmax < 0:
            raise UsageError("--cmax must be non-negative")
        scan = min_sheet(log, a, args.cmax, branch)
        doc["outcome"] = _outcome(True, scan.best_value, best_branch=scan.best_branch.as_dict(),
                                  best_norm=scan.best_norm, principal_norm=scan.principal_norm,
                                  evaluated=scan.evaluated)
    return doc, EXIT_OK


def _render_text(doc: dict) -> str:
    if doc["op"] == "roundtrip":
        return (f"{doc['algebra']} roundtrip seed={doc['seed']} count={doc['count']} "
                f"rejection_rate={doc['rejection_rate']:.4f} singular={doc['singular']} "
                f"max_residual={doc['max_residual']:.3e} mean_residual={doc['mean_residual']:.3e}")
    out = doc["outcome"]
    lines = []
    if not out["exists"]:
        lines.append(f"nonexistent: {out.get('reason')}")
    elif "value_scalar" in out:
        lines.append(f"{out['value_scalar']:.10g}")
    else:
        sig = doc["algebra"]
        finite = Multivector(out["coeffs"], sig)
        lam = Multivector(out["lambda_coeffs"], sig)
        lines.append(_text_value(ExtendedMultivector(finite, lam)))
    if out["case_row"]:
        lines.append("rows: " + ", ".join(out["case_row"]))
    for key in ("converged", "terms", "best_norm", "principal_norm"):
        if key in out:
            lines.append(f"{key}: {out[key]}")
    if "residual" in doc:
        lines.append(f"residual: {doc['residual']:.3e}")
    return "\n".join(lines)


def _shield_negatives(argv: Sequence[str]) -> list[str]:
    """Keep ``-2+e1`` style literals away from option parsing."""
    return [" " + t if len(t) > 1 and t[0] == "-" and t[1] != "-" and t != "-h" else t for t in argv]


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_shield_negatives(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        with tolerance(args.tol) if args.tol else nullcontext():
            doc, code = _run(args)
    except (MvSyntaxError, UsageError, AlgebraError) as exc:
        print(f"galog: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonExistentLogError, NonInvertibleError) as exc:
        print(f"galog: nonexistent: {exc}", file=sys.stderr)
        return EXIT_NONEXISTENT
    except NonRepresentableError as exc:
        print(f"galog: singular: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(_render_text(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
