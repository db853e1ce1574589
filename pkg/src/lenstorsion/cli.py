"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 direct sum not
converged.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings

from .lens import FlatBundle, LensSpace
from .spectral import ConvergenceWarning, kappa_direct_all
from .torsion import corollary_report, kappa_closed
from .verify import run_identity_ledger

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CONVERGENCE = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _num(x):
    """17 significant digits, enough to round-trip a double."""
    if isinstance(x, bool) or isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            return json.dumps(None)
        return format(x, ".17g")
    raise TypeError(type(x))


def dumps(obj) -> str:
    """JSON with every float printed at 17 significant digits."""
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, str) or obj is None:
        return json.dumps(obj)
    return _num(obj)


def _lens(args) -> LensSpace:
    nu = args.nu if args.nu is not None else [1] * (args.n + 1)
    try:
        return LensSpace(args.n, args.mu, tuple(nu))
    except ValueError as exc:
        raise InputError(str(exc))


def _bundle(args, L: LensSpace) -> FlatBundle:
    us = args.us if args.us is not None else [args.u]
    try:
        return FlatBundle(L.mu, tuple(us))
    except ValueError as exc:
        raise InputError(str(exc))


def _emit(args, rows: list[dict], out) -> None:
    if args.format == "json":
        out.write((dumps(rows[0]) if len(rows) == 1 else dumps(rows)) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(rows[0]))
        for row in rows:
            writer.writerow([_cell(v) for v in row.values()])
        out.write(buf.getvalue())
    else:
        for k, row in enumerate(rows):
            if k:
                out.write("\n")
            width = max(len(key) for key in row)
            for key, v in row.items():
                out.write(f"{key:<{width}}  {_cell(v)}\n")


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def cmd_kappa(args, out) -> int:
    L = _lens(args)
    s = args.s
    try:
        closed = kappa_closed(L, args.u, s)
    except ValueError as exc:
        raise InputError(str(exc))
    row = {
        "n": L.n,
        "mu": L.mu,
        "nu": list(L.nu),
        "u": args.u % L.mu,
        "s": float(s),
        "kappa_closed": closed.value.real,
        "kappa_closed_err": closed.err,
    }
    code = EXIT_OK
    if s >= L.n + 2:
        direct = kappa_direct_all(L, s, args.pmax, args.qmax)
        u = args.u % L.mu
        value, tail = float(direct.values[u]), float(direct.tails[u])
        row.update(kappa_direct=value, tail=tail, discrepancy=abs(value - closed.value.real))
        if tail > 1e-4 * abs(value):
            warnings.warn(f"direct sum not converged: tail {tail:.3g}", ConvergenceWarning)
            code = EXIT_CONVERGENCE
    _emit(args, [row], out)
    return code


def cmd_torsion(args, out) -> int:
    L = _lens(args)
    B = _bundle(args, L)
    _emit(args, [corollary_report(L, B).as_dict()], out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    L = _lens(args)
    rows = []
    for u in range(L.mu):
        d = corollary_report(L, FlatBundle.line(L.mu, u)).as_dict()
        rows.append({"u": u, **{k: v for k, v in d.items() if k not in ("n", "mu", "nu", "us")}})
    _emit(args, rows, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    results = run_identity_ledger(seed=args.seed, grid_mu=args.grid_mu, grid_n=args.grid_n)
    if args.format == "text":
        for r in results:
            out.write(r.line() + "\n")
    else:
        _emit(args, [
            {"check": r.name, "max_residual": r.max_residual, "tol": r.tol, "cases": r.count, "passed": str(r.passed).lower()}
            for r in results
        ], out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lenstorsion",
        description="Contact (Rumin) and Ray-Singer torsion of lens spaces with flat line bundles.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, default_format="text"):
        p.add_argument("--n", type=int, default=1, help="half of dim - 1: the space is S^{2n+1}/Gamma")
        p.add_argument("--mu", type=int, default=1, help="order of the cyclic group")
        p.add_argument("--nu", type=_int_list, default=None, help="rotation numbers, comma separated (default all 1)")
        p.add_argument("--format", choices=("json", "csv", "text"), default=default_format)
        p.add_argument("--output", default=None, help="write here instead of stdout")

    p = sub.add_parser("kappa", help="torsion function at s, closed form and direct sum")
    common(p)
    p.add_argument("--u", type=int, default=0)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--pmax", type=int, default=64)
    p.add_argument("--qmax", type=int, default=64)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("torsion", help="contact and Ray-Singer torsion of a flat bundle")
    common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--u", type=int, default=0)
    g.add_argument("--us", type=_int_list, default=None, help="characters of the line summands")
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("table", help="torsion report for every character u = 0..mu-1")
    common(p, default_format="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the seeded identity ledger")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid-mu", type=int, default=12)
    p.add_argument("--grid-n", type=int, default=3)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        if args.output:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
