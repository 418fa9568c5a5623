"""Command-line interface.

Subcommands:
    eval     evaluate gamma-k / beta-k / zeta-k / pochhammer / hyper on a
             grid (comma-separated lists per flag, Cartesian product) and
             emit one record per point as CSV or JSON
    verify   run a named verification suite (or "all"); one report line
             per check; exit 0 iff everything passes
    forests  count a forest family, optionally exporting the canonical
             serializations

Exit codes: 0 success, 1 verification failure, 2 domain error (the message
names the violated precondition), 3 non-convergence.

Tolerances come from --rel-tol/--abs-tol when given, else from the
KSPECIAL_PROFILE environment variable (strict|default|fast), else the
default profile. Records print numbers in shortest round-trip decimal
form and are emitted in input order, so identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .betak import BetaKSpec, beta_k
from .errors import (CapExceeded, DivergentSeries, DomainError,
                     InvariantViolation, NonConvergent, OutsideRadius,
                     PoleError)
from .forests import ForestFamily, count, enumerate_forests, serialize_forest
from .gammak import GammaKEvaluator
from .hypergeometric import (HypergeometricSpec, evaluate,
                             integral_representation_check,
                             transfer_classical)
from .pochhammer import PochhammerSpec, pochhammer_k
from .profiles import DEFAULT, PROFILES, PrecisionProfile
from .verify import SUITES, run_suite
from .zetak import ZetaKSpec, zeta_k


@dataclass(frozen=True, slots=True)
class OutputRecord:
    function: str
    inputs: dict
    value: object
    err_estimate: float
    method: str


def _parse_number(text: str):
    """int if it looks like one, Fraction for p/q, float otherwise."""
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    if "/" in text:
        return Fraction(text)
    return float(text)


def _num_list(text: str) -> list:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list")
    return [_parse_number(t) for t in items]


def _fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        raise TypeError("boolean has no record form")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return repr(float(v))


def _json_value(v):
    if isinstance(v, Fraction):
        return _fmt(v)
    return v


def _emit(records: list[OutputRecord], fmt: str, out) -> None:
    if fmt == "json":
        payload = [{"function": r.function,
                    "inputs": {k: _json_value(v) for k, v in r.inputs.items()},
                    "value": _json_value(r.value),
                    "err_estimate": r.err_estimate,
                    "method": r.method} for r in records]
        json.dump(payload, out, indent=2)
        out.write("\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    input_names = list(records[0].inputs) if records else []
    writer.writerow(["function", *input_names, "value", "err_estimate",
                     "method"])
    for r in records:
        writer.writerow([r.function, *(_fmt(r.inputs[n]) for n in input_names),
                         _fmt(r.value), _fmt(r.err_estimate), r.method])


def _resolve_profile(args) -> PrecisionProfile:
    env = os.environ.get("KSPECIAL_PROFILE")
    if env is not None and env not in PROFILES:
        raise DomainError(f"KSPECIAL_PROFILE must be one of "
                          f"{sorted(PROFILES)}, got {env!r}")
    base = PROFILES[env] if env is not None else DEFAULT
    overrides = {}
    if args.rel_tol is not None:
        overrides["rel_tol"] = args.rel_tol
    if args.abs_tol is not None:
        overrides["abs_tol"] = args.abs_tol
    return dataclasses.replace(base, **overrides) if overrides else base


def _eval_gamma_k(args, profile: PrecisionProfile) -> list[OutputRecord]:
    out = []
    for k, x in product(args.k, args.x):
        ev = GammaKEvaluator(float(k), profile, args.method)
        r = ev.evaluate(float(x))
        out.append(OutputRecord("gamma-k", {"k": k, "x": x},
                                r.value, r.err_estimate, r.method))
    return out


def _eval_beta_k(args, profile: PrecisionProfile) -> list[OutputRecord]:
    out = []
    for k, x, y in product(args.k, args.x, args.y):
        spec = BetaKSpec(float(k), float(x), float(y))
        r = beta_k(spec, args.method, profile)
        # record the requested route, not the EvalResult tag: halfline and
        # unit both tag "integral" and would be indistinguishable in a row
        out.append(OutputRecord("beta-k", {"k": k, "x": x, "y": y},
                                r.value, r.err_estimate, args.method))
    return out


def _eval_zeta_k(args, profile: PrecisionProfile) -> list[OutputRecord]:
    out = []
    for k, x, s in product(args.k, args.x, args.s):
        r = zeta_k(ZetaKSpec(float(k), float(x), float(s)), profile)
        out.append(OutputRecord("zeta-k", {"k": k, "x": x, "s": s},
                                r.value, r.err_estimate, r.method))
    return out


def _eval_pochhammer(args, profile: PrecisionProfile) -> list[OutputRecord]:
    out = []
    for x, n, k in product(args.x, args.n, args.k):
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"--n entries must be integers >= 0, got {n!r}")
        v = pochhammer_k(PochhammerSpec(x, n, k))
        err = 0.0 if isinstance(v, (int, Fraction)) else abs(v) * 2.3e-16 * max(n, 1)
        out.append(OutputRecord("pochhammer", {"x": x, "n": n, "k": k},
                                v, err, "exact"))
    return out


def _eval_hyper(args, profile: PrecisionProfile) -> list[OutputRecord]:
    spec = HypergeometricSpec(tuple(args.a), tuple(args.ka),
                              tuple(args.b), tuple(args.sb))
    route = {"series": evaluate, "transfer": transfer_classical,
             "integral": integral_representation_check}[args.method]
    params = {"a": ",".join(map(_fmt, args.a)),
              "ka": ",".join(map(_fmt, args.ka)),
              "b": ",".join(map(_fmt, args.b)),
              "sb": ",".join(map(_fmt, args.sb))}
    out = []
    for x in args.x:
        r = route(spec, float(x), profile)
        out.append(OutputRecord("hyper", {**params, "x": x},
                                r.value, r.err_estimate, args.method))
    return out


def _cmd_forests(args) -> int:
    family = ForestFamily(args.a, args.n, args.k)
    total = count(family)
    print(total)
    if total > args.cap:
        print(f"enumeration refused: count {total} exceeds cap {args.cap}",
              file=sys.stderr)
        return 2
    if args.export is not None:
        with open(args.export, "w", encoding="utf-8") as fh:
            for f in enumerate_forests(family, cap=args.cap):
                fh.write(serialize_forest(f))
                fh.write("\n")
    return 0


def _cmd_verify(args, profile: PrecisionProfile) -> int:
    rows = run_suite(args.suite, profile)
    worst = True
    for suite, r in rows:
        status = "PASS" if r.passed else "FAIL"
        worst = worst and r.passed
        print(f"{status} {suite}/{r.name} max_dev={r.max_dev:.3e} "
              f"tol={r.tol:.3e}")
    print(f"{sum(r.passed for _, r in rows)}/{len(rows)} checks passed",
          file=sys.stderr)
    return 0 if worst else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kspecial",
        description="Evaluate and cross-verify the k-deformed special "
                    "functions (Pochhammer symbol, Gamma_k, B_k, zeta_k, "
                    "generalized hypergeometric series, planar forests).")
    sub = parser.add_subparsers(dest="command", required=True)

    tol = argparse.ArgumentParser(add_help=False)
    tol.add_argument("--rel-tol", type=float, default=None,
                     help="override the profile's relative tolerance")
    tol.add_argument("--abs-tol", type=float, default=None,
                     help="override the profile's absolute tolerance")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("csv", "json"), default="csv",
                     help="output format (default csv)")

    pe = sub.add_parser("eval", help="evaluate a function on a grid")
    fe = pe.add_subparsers(dest="function", required=True)

    g = fe.add_parser("gamma-k", parents=[tol, fmt])
    g.add_argument("--k", type=_num_list, required=True)
    g.add_argument("--x", type=_num_list, required=True)
    g.add_argument("--method", default="scaling",
                   choices=("scaling", "integral", "limit", "product"))
    g.set_defaults(run=_eval_gamma_k)

    b = fe.add_parser("beta-k", parents=[tol, fmt])
    b.add_argument("--k", type=_num_list, required=True)
    b.add_argument("--x", type=_num_list, required=True)
    b.add_argument("--y", type=_num_list, required=True)
    b.add_argument("--method", default="ratio",
                   choices=("ratio", "halfline", "unit", "product"))
    b.set_defaults(run=_eval_beta_k)

    z = fe.add_parser("zeta-k", parents=[tol, fmt])
    z.add_argument("--k", type=_num_list, required=True)
    z.add_argument("--x", type=_num_list, required=True)
    z.add_argument("--s", type=_num_list, required=True)
    z.set_defaults(run=_eval_zeta_k)

    po = fe.add_parser("pochhammer", parents=[tol, fmt])
    po.add_argument("--x", type=_num_list, required=True)
    po.add_argument("--n", type=_num_list, required=True)
    po.add_argument("--k", type=_num_list, required=True)
    po.set_defaults(run=_eval_pochhammer)

    h = fe.add_parser("hyper", parents=[tol, fmt])
    h.add_argument("--a", type=_num_list, required=True,
                   help="upper parameters (comma list)")
    h.add_argument("--ka", type=_num_list, required=True,
                   help="upper deformation steps, paired with --a")
    h.add_argument("--b", type=_num_list, default=[],
                   help="lower parameters (comma list)")
    h.add_argument("--sb", type=_num_list, default=[],
                   help="lower deformation steps, paired with --b")
    h.add_argument("--x", type=_num_list, required=True)
    h.add_argument("--method", default="series",
                   choices=("series", "transfer", "integral"))
    h.set_defaults(run=_eval_hyper)

    v = sub.add_parser("verify", parents=[tol],
                       help="run a verification suite")
    v.add_argument("suite", nargs="?", default="all",
                   choices=("all", *SUITES))

    f = sub.add_parser("forests", help="count (and export) a forest family")
    f.add_argument("--a", type=int, required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--export", default=None, metavar="PATH",
                   help="write canonical serializations to PATH")
    f.add_argument("--cap", type=int, default=1_000_000,
                   help="refuse enumeration beyond this many forests")
    f.set_defaults(run=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "eval":
            records = args.run(args, _resolve_profile(args))
            _emit(records, args.format, sys.stdout)
            return 0
        if args.command == "verify":
            return _cmd_verify(args, _resolve_profile(args))
        return _cmd_forests(args)
    except CapExceeded as exc:
        print(exc.count)
        print(f"enumeration refused: {exc}", file=sys.stderr)
        return 2
    except (DomainError, PoleError, OutsideRadius, DivergentSeries,
            InvariantViolation, ValueError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except NonConvergent as exc:
        print(f"failed to converge: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())
