"""Command line entry point: ``rmbispec verify|series|coeff|macdonald``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import bispectral as bs
from .macdonald import macdonald_poly
from .mps import scalar_str
from .qseries import Params
from .ring import parse_rat, rat_str
from .verify import SUITES, SuiteConfig, reports_to_csv, reports_to_json, run_suites
from .verify.config import DEFAULT_Q, DEFAULT_T

SERIES_OBJECTS = {"p": bs.p_series, "phi": bs.phi_series, "psi": bs.psi_series, "F": bs.F_series}


class UsageError(Exception):
    pass


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got {text!r}")


def _rat_list(text: str) -> List[Fraction]:
    return [_rat(v) for v in text.split(",") if v.strip()]


def _shared() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--deg-z", type=int, default=None, dest="deg_z")
    p.add_argument("--deg-w", type=int, default=None, dest="deg_w")
    p.add_argument("--q", type=_rat, default=DEFAULT_Q)
    p.add_argument("--t", type=_rat, default=DEFAULT_T)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=("exact", "float"), default="exact")
    p.add_argument("--precision", type=int, default=256)
    p.add_argument("--format", choices=("json", "csv"), default="json", dest="fmt")
    p.add_argument("--out", default=None)
    return p


def build_parser() -> argparse.ArgumentParser:
    shared = _shared()
    parser = argparse.ArgumentParser(prog="rmbispec")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[shared], help="run verification suites")
    v.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    v.add_argument("--shells", type=int, default=None)
    v.add_argument("--tol", type=float, default=None)
    v.add_argument("--timing", action="store_true",
                   help="record wall-clock times (reports are then not reproducible)")

    s = sub.add_parser("series", parents=[shared], help="emit a truncated series")
    s.add_argument("--object", choices=sorted(SERIES_OBJECTS), default="psi")

    c = sub.add_parser("coeff", parents=[shared], help="evaluate c_n(theta; s)")
    c.add_argument("--theta", type=_int_list, required=True,
                   help="entries theta_12, theta_13, ..., theta_23, ... row by row")
    c.add_argument("--s-ratios", type=_rat_list, default=None, dest="s_ratios",
                   help="s_2/s_1, s_3/s_2, ... (default 1/5, 1/11, 1/13, 1/17, ...)")

    m = sub.add_parser("macdonald", parents=[shared], help="emit P_lambda via the tableau sum")
    m.add_argument("--lambda", type=_int_list, required=True, dest="lam")
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args) -> Params:
    return Params(args.q, args.t, args.backend, args.precision)


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(n=args.n, Dz=args.deg_z, Dw=args.deg_w, q=args.q, t=args.t,
                      seed=args.seed, backend=args.backend, precision=args.precision,
                      N=args.shells, tol=args.tol, timing=args.timing)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = run_suites(names, cfg)
    text = reports_to_json(reports) if args.fmt == "json" else reports_to_csv(reports)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_series(args) -> int:
    if args.n is None:
        raise UsageError("series needs --n")
    caps = (args.deg_z if args.deg_z is not None else 4, args.deg_w if args.deg_w is not None else 4)
    P = _params(args)
    f = SERIES_OBJECTS[args.object](args.n, P, caps)
    data = {"object": args.object, "q": rat_str(args.q), "t": rat_str(args.t)}
    data.update(f.to_json())
    if args.fmt == "csv":
        lines = ["ze,we,coeff"]
        for term in data["terms"]:
            lines.append(f"\"{term['ze']}\",\"{term['we']}\",{term['coeff']}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    return 0


def _cmd_coeff(args) -> int:
    need = None
    m = len(args.theta)
    for n in range(1, 64):
        if n * (n - 1) // 2 == m:
            need = n
            break
    if need is None:
        raise UsageError(f"{m} entries is not n(n-1)/2 for any n")
    n = args.n if args.n is not None else need
    if n != need:
        raise UsageError(f"--n {n} needs {n * (n - 1) // 2} theta entries")
    theta = bs.UpperTri(n, tuple(args.theta))
    ratios = args.s_ratios
    if ratios is None:
        base = bs.DEFAULT_BASE_RATIOS
        ratios = [base[i % len(base)] for i in range(n - 1)]
    if len(ratios) != n - 1:
        raise UsageError(f"need {n - 1} s-ratios")
    s = bs.ratios_to_point(list(ratios), Fraction(1))
    value = bs.c_at(theta, s, _params(args))
    data = {"n": n, "theta": list(theta.entries), "s": [scalar_str(v) for v in s],
            "q": rat_str(args.q), "t": rat_str(args.t), "value": scalar_str(value)}
    if args.fmt == "csv":
        _emit("value\n" + data["value"] + "\n", args.out)
    else:
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    return 0


def _cmd_macdonald(args) -> int:
    lam = [v for v in args.lam]
    n = args.n if args.n is not None else len(lam)
    P = macdonald_poly(tuple(sorted(lam, reverse=True)), n, _params(args))
    data = {"lambda": lam, "q": rat_str(args.q), "t": rat_str(args.t)}
    data.update(P.to_json())
    if args.fmt == "csv":
        lines = ["exponent,coeff"] + [f"\"{t['exponent']}\",{t['coeff']}" for t in data["terms"]]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    return 0


COMMANDS = {"verify": _cmd_verify, "series": _cmd_series, "coeff": _cmd_coeff,
            "macdonald": _cmd_macdonald}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"rmbispec {args.command}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
