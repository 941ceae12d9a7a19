"""Command-line entry point.

Subcommands: verify (run a named identity suite), eval (evaluate a
polynomial), matrix (dump an operator in the documented JSON schema),
bethe (solve a small root system), gaudin (truncated sum vs determinant).

All parameters are exact rational strings; the only floats anywhere are
the Bethe solver tolerances.  Exit codes: 0 pass, 1 identity failure,
2 usage error.  INTEGRABLE_LAB_SEED overrides the default seed, and a
flat key=value config file can supply any flag (explicit flags win).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .baxter_q import build_qmatrix
from .bethe import bethe_solve, periodic_eigen_residual
from .gaudin import gaudin_det, gaudin_sum
from .graded import matrix_dump
from .hall_littlewood import (
    complete_q_coeffs,
    elementary_e_coeffs,
    hl_P,
    hl_Q,
    hl_R,
    skew_P,
    skew_Q_omega,
)
from .lattice import build_lax, periodic_transfer, single_site_basis
from .partitions import (
    occupation_basis,
    parse_partition,
    partition_basis,
)
from .scalars import format_scalar, parse_scalar
from .suites import SUITE_NAMES, SuiteSpec, run_suite
from .vertex_ops import build_gamma

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _parse_vars(text: str):
    return [parse_scalar(v) for v in text.split(",") if v.strip()]


def _parse_mu(text: str):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return tuple(int(v) for v in text.split(",") if v.strip())


def _load_config(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {line!r}")
            key, val = line.split("=", 1)
            out[key.strip()] = val.strip()
    return out


def _merge_config(args, parser_defaults):
    """Config file supplies values for flags left at their defaults."""
    if not getattr(args, "config", None):
        return args
    conf = _load_config(args.config)
    for key, val in conf.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            continue
        if getattr(args, attr) == parser_defaults.get(attr):
            current = parser_defaults.get(attr)
            if isinstance(current, int) and not isinstance(current, bool):
                val = int(val)
            setattr(args, attr, val)
    return args


def _default_seed():
    env = os.environ.get("INTEGRABLE_LAB_SEED")
    if env is not None:
        return int(env)
    return 0


def cmd_verify(args) -> int:
    params = {}
    for key in ("N", "n", "D", "degree", "cap", "draws", "truncation",
                "max_weight", "max_len", "vars"):
        val = getattr(args, key, None)
        if val is not None:
            params[key if key not in ("N", "n") else {"N": "N_range", "n": "n_range"}[key]] = int(val)
    if args.t is not None:
        params["t"] = parse_scalar(args.t)
    if args.x is not None:
        params["x"] = parse_scalar(args.x)
    try:
        report = run_suite(SuiteSpec(args.suite, seed=args.seed, params=params))
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(f"suite {report['suite']} (seed {report['seed']}): {report['status'].upper()}")
        for check in report["checks"]:
            line = f"  [{check['status'].upper():4}] {check['name']}"
            if check.get("detail"):
                line += f"  ({check['detail']})"
            print(line)
    return EXIT_PASS if report["status"] == "pass" else EXIT_FAIL


def cmd_eval(args) -> int:
    t = parse_scalar(args.t)
    vals = _parse_vars(args.vars)
    kind = args.kind
    if kind in ("P", "Q"):
        lam = parse_partition(args.lam)
        value = hl_P(lam, vals, t) if kind == "P" else hl_Q(lam, vals, t)
    elif kind == "R":
        value = hl_R(_parse_mu(args.mu), vals, t)
    elif kind == "skew":
        lam = parse_partition(args.lam)
        mu = parse_partition(args.mu) if args.mu else ()
        fn = skew_P if args.family == "P" else skew_Q_omega
        value = fn(lam, mu, vals, t)
    elif kind == "qr":
        value = complete_q_coeffs(vals, t, args.r)[args.r]
    elif kind == "er":
        value = elementary_e_coeffs(vals, args.r)[args.r]
    else:
        print(f"error: unknown eval kind {kind!r}", file=sys.stderr)
        return EXIT_USAGE
    print(format_scalar(value))
    return EXIT_PASS


def cmd_matrix(args) -> int:
    t = parse_scalar(args.t)
    which = args.which
    if which == "lambda":
        basis = occupation_basis(args.N, args.n)
        op = periodic_transfer(args.N, args.n, parse_scalar(args.x), t)
        meta = {"display_note": "the 3x3 example appears in reversed basis order"}
        dump = matrix_dump(op, basis, f"transfer N={args.N} n={args.n}", meta)
    elif which == "q":
        basis = occupation_basis(args.N, args.n)
        op = build_qmatrix(args.N, args.n, parse_scalar(args.x), t)
        meta = {"display_note": "the 3x3 example appears in reversed basis order"}
        dump = matrix_dump(op, basis, f"qmatrix N={args.N} n={args.n}", meta)
    elif which == "gamma":
        basis = partition_basis(args.D)
        vop = build_gamma(args.family, args.sign, basis, t)
        dump = matrix_dump(vop.op, basis, f"gamma {args.family}{args.sign} D={args.D}")
    elif which == "lax":
        basis = single_site_basis(args.cap)
        lax = build_lax(args.family if args.family in ("qboson", "spin_s") else "qboson",
                        basis, {"t": t, "s": parse_scalar(args.s)})
        dump = {
            "name": f"lax {args.family}",
            "basis": basis.labels(),
            "entries": {f"{i}{j}": matrix_dump(lax[i][j], basis, f"L[{i}][{j}]")["entries"]
                        for i in range(2) for j in range(2)},
        }
    else:
        print(f"error: unknown matrix kind {which!r}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(dump, indent=2, sort_keys=True))
    return EXIT_PASS


def cmd_bethe(args) -> int:
    system = bethe_solve(args.N, args.M, parse_scalar(args.t), parse_scalar(args.s),
                         parse_scalar(args.x), seeds=args.seeds, seed=args.seed)
    out = system.to_json()
    if args.M > 0 and system.roots:
        out["eigen_residual"] = periodic_eigen_residual(system, complex(0.37))
    print(json.dumps(out, indent=2, sort_keys=True))
    ok = bool(system.roots) or args.M == 0
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_gaudin(args) -> int:
    t = parse_scalar(args.t)
    s = parse_scalar(args.s)
    U = _parse_vars(args.U)
    V = _parse_vars(args.V)
    n = len(U)
    val, tail = gaudin_sum(n, U, V, t, s, args.truncation)
    det = gaudin_det(n, U, V, t)
    gap = val - det if val >= det else det - val
    ok = gap <= tail
    print(json.dumps({
        "n": n,
        "sum": format_scalar(val),
        "determinant": format_scalar(det),
        "tail_bound": format_scalar(tail),
        "within_bound": ok,
    }, indent=2, sort_keys=True))
    return EXIT_PASS if ok else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="integrable-lab",
        description="Exact checks for q-boson/Toda transfer matrices, "
                    "Hall-Littlewood polynomials, Baxter Q-matrices and Bethe systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a named identity suite")
    p_verify.add_argument("suite", help=f"one of: {', '.join(SUITE_NAMES)}")
    p_verify.add_argument("--seed", type=int, default=_default_seed())
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--config")
    for flag in ("N", "n", "D", "degree", "cap", "draws", "truncation",
                 "max_weight", "max_len", "vars"):
        p_verify.add_argument(f"--{flag}", type=int, default=None)
    p_verify.add_argument("--t", default=None)
    p_verify.add_argument("--x", default=None)
    p_verify.set_defaults(fn=cmd_verify)

    p_eval = sub.add_parser("eval", help="evaluate a polynomial exactly")
    p_eval.add_argument("kind", choices=["P", "Q", "R", "skew", "qr", "er"])
    p_eval.add_argument("--lambda", dest="lam", default="[]")
    p_eval.add_argument("--mu", default=None)
    p_eval.add_argument("--vars", required=True, help="comma-separated rationals")
    p_eval.add_argument("--t", required=True)
    p_eval.add_argument("--r", type=int, default=1)
    p_eval.add_argument("--family", choices=["P", "Qomega"], default="P")
    p_eval.add_argument("--config")
    p_eval.set_defaults(fn=cmd_eval)

    p_matrix = sub.add_parser("matrix", help="dump an operator as JSON")
    p_matrix.add_argument("which", choices=["lambda", "q", "gamma", "lax"])
    p_matrix.add_argument("--N", type=int, default=2)
    p_matrix.add_argument("--n", type=int, default=2)
    p_matrix.add_argument("--D", type=int, default=4)
    p_matrix.add_argument("--cap", type=int, default=4)
    p_matrix.add_argument("--t", default="1/3")
    p_matrix.add_argument("--x", default="2")
    p_matrix.add_argument("--s", default="0")
    p_matrix.add_argument("--family", default="L")
    p_matrix.add_argument("--sign", choices=["+", "-"], default="-")
    p_matrix.add_argument("--config")
    p_matrix.set_defaults(fn=cmd_matrix)

    p_bethe = sub.add_parser("bethe", help="solve a small Bethe system")
    p_bethe.add_argument("--N", type=int, required=True)
    p_bethe.add_argument("--M", type=int, required=True)
    p_bethe.add_argument("--t", default="1/3")
    p_bethe.add_argument("--s", default="0")
    p_bethe.add_argument("--x", default="1")
    p_bethe.add_argument("--seeds", type=int, default=20)
    p_bethe.add_argument("--seed", type=int, default=_default_seed())
    p_bethe.add_argument("--config")
    p_bethe.set_defaults(fn=cmd_bethe)

    p_gaudin = sub.add_parser("gaudin", help="truncated scalar product vs determinant")
    p_gaudin.add_argument("--U", required=True, help="comma-separated rationals")
    p_gaudin.add_argument("--V", required=True)
    p_gaudin.add_argument("--t", default="2/7")
    p_gaudin.add_argument("--s", default="0")
    p_gaudin.add_argument("--truncation", type=int, default=60)
    p_gaudin.add_argument("--config")
    p_gaudin.set_defaults(fn=cmd_gaudin)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    defaults = {}
    for action in parser._subparsers._group_actions[0].choices[args.command]._actions:
        if action.dest != "help":
            defaults[action.dest] = action.default
    try:
        args = _merge_config(args, defaults)
        return args.fn(args)
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
