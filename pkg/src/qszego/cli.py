"""Command line interface: evaluate kernels, run verification suites, export.

Output is machine-first: values and check reports go to stdout as JSON (one
line per check for suites), human summaries go to stderr.  Exit codes:
0 success, 1 check or evaluation failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .geometry import GroupElement, SiegelPoint, homogeneous_dim, rho_length
from .hypercomplex import Hypercomplex
from .kernel import (
    KernelOrder,
    cauchy_kernel,
    group_kernel,
    szego_density,
    szego_eval,
)
from .suites import SUITE_NAMES, run_suite


class UsageError(Exception):
    pass


def _parse_components(text, expected=None):
    try:
        comps = [float(Fraction(part)) for part in text.split(",") if part.strip() != ""]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse component list {text!r}: {exc}") from None
    if expected is not None and len(comps) != expected:
        raise UsageError(f"expected {expected} components, got {len(comps)} in {text!r}")
    return comps


def _parse_point(text, n):
    comps = _parse_components(text, expected=4 * (n + 1))
    horizontal = tuple(
        Hypercomplex(comps[4 * i : 4 * i + 4], exact=False) for i in range(n)
    )
    vertical = Hypercomplex(comps[4 * n :], exact=False)
    return SiegelPoint(horizontal, vertical)


def _load_config(path):
    values = {}
    try:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError(f"bad config line {line!r}")
                key, _, val = line.partition("=")
                values[key.strip()] = val.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    return values


_FLAG_DEFAULTS = {
    "n": 1,
    "m": 4,
    "nu": "",
    "q": "",
    "omega": "",
    "t": "",
    "eps": 0.0,
    "tol": 1e-3,
    "budget": 2.0e7,
    "seed": 0,
    "output": "",
    "format": "json",
    "points": 50,
    "table": "K-decay",
}


def _apply_config(args, parser):
    """Fill unset flags from the config file, then from builtin defaults.

    Flags given on the command line are parsed with SUPPRESS defaults, so a
    missing attribute means the user did not pass it; explicit flags always
    win over the config file.
    """
    config = _load_config(args.config) if getattr(args, "config", "") else {}
    for dest, default in _FLAG_DEFAULTS.items():
        if hasattr(args, dest):
            continue
        raw = config.get(dest.replace("_", "-"), config.get(dest))
        if raw is None:
            setattr(args, dest, default)
            continue
        if isinstance(default, bool):
            value = raw.lower() in ("1", "true", "yes")
        elif isinstance(default, int):
            value = int(raw)
        elif isinstance(default, float):
            value = float(raw)
        else:
            value = raw
        setattr(args, dest, value)
    return args


def _emit_value(args, payload):
    text = json.dumps(payload, sort_keys=True)
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from None
    else:
        print(text)


def cmd_eval(args, parser):
    kind = args.kind
    if kind in ("s", "density"):
        nu = _parse_components(args.nu, expected=4 if args.m == 4 else 2)
        if not any(nu):
            print("error: singular point nu = 0", file=sys.stderr)
            return 1
        value = szego_density(KernelOrder(args.n, m=args.m)).eval(nu)
        _emit_value(
            args,
            {"kind": "szego-density", "n": args.n, "m": args.m, "nu": nu, "value": list(value.comps)},
        )
        return 0
    if kind in ("E", "cauchy"):
        nu = _parse_components(args.nu, expected=4 if args.m == 4 else 2)
        if not any(nu):
            print("error: singular point nu = 0", file=sys.stderr)
            return 1
        value = cauchy_kernel(args.m).eval(nu)
        _emit_value(
            args, {"kind": "cauchy-kernel", "m": args.m, "nu": nu, "value": list(value.comps)}
        )
        return 0
    if kind in ("S", "kernel"):
        if not args.q or not args.omega:
            raise UsageError("S needs --q and --omega")
        q = _parse_point(args.q, args.n)
        omega = _parse_point(args.omega, args.n)
        try:
            value = szego_eval(KernelOrder(args.n), q, omega)
        except ZeroDivisionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        from .kernel import szego_nu

        nu = szego_nu(q, omega)
        _emit_value(
            args,
            {
                "kind": "szego-kernel",
                "n": args.n,
                "nu": [float(c) for c in nu.comps],
                "value": list(value.comps),
            },
        )
        return 0
    if kind in ("K", "group"):
        if not args.omega or not args.t:
            raise UsageError("K needs --omega and --t")
        w = _parse_components(args.omega, expected=4 * args.n)
        t = _parse_components(args.t, expected=3)
        h = GroupElement(
            tuple(Hypercomplex(w[4 * i : 4 * i + 4], exact=False) for i in range(args.n)),
            tuple(t),
        )
        try:
            value = group_kernel(KernelOrder(args.n), h, args.eps)
        except ZeroDivisionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        _emit_value(
            args,
            {
                "kind": "group-kernel",
                "n": args.n,
                "eps": args.eps,
                "rho": rho_length(h),
                "value": list(value.comps),
            },
        )
        return 0
    raise UsageError(f"unknown eval kind {args.kind!r}")


def cmd_verify(args, parser):
    reports = run_suite(
        args.suite, n=args.n, tol=args.tol, budget=args.budget, seed=args.seed
    )
    lines = [r.to_json_line() for r in reports]
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write("\n".join(lines) + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from None
    else:
        for line in lines:
            print(line)
    n_pass = sum(r.passed for r in reports)
    print(f"{args.suite}: {n_pass}/{len(reports)} checks passed", file=sys.stderr)
    return 0 if n_pass == len(reports) else 1


def cmd_export(args, parser):
    if args.what == "kernel":
        kernel = szego_density(KernelOrder(args.n, m=args.m))
        payload = kernel.to_json()
        out = args.output or f"szego-density-n{args.n}-m{args.m}.json"
        try:
            with open(out, "w") as fh:
                json.dump(payload, fh, sort_keys=True, indent=1)
                fh.write("\n")
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc}") from None
        print(f"wrote {out}", file=sys.stderr)
        return 0
    if args.what == "table":
        if args.table == "K-decay":
            density = szego_density(KernelOrder(args.n))
            d = homogeneous_dim(args.n)
            rows = [("rho", "absK", "absK_times_rho_d")]
            for i in range(args.points):
                rho = 10 ** (-1 + 3.0 * i / max(1, args.points - 1))
                h = GroupElement(
                    (Hypercomplex((rho, 0.0, 0.0, 0.0), exact=False),)
                    + tuple(
                        Hypercomplex.zero(4, exact=False) for _ in range(args.n - 1)
                    ),
                    (0.0, 0.0, 0.0),
                )
                val = group_kernel(KernelOrder(args.n), h, 0.0)
                absk = abs(val)
                rows.append((rho, absk, absk * rho**d))
        elif args.table == "s-ray":
            density = szego_density(KernelOrder(args.n, m=args.m))
            rows = [("x0",) + tuple(f"s{i}" for i in range(density.alg_dim))]
            for i in range(args.points):
                x0 = 0.25 + 4.0 * i / max(1, args.points - 1)
                point = [x0] + [0.0] * (density.alg_dim - 1)
                val = density.eval(point)
                rows.append((x0,) + tuple(val.comps))
        else:
            raise UsageError(f"unknown table {args.table!r}")
        out = args.output or f"{args.table}-n{args.n}.csv"
        try:
            with open(out, "w", newline="") as fh:
                csv.writer(fh).writerows(rows)
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc}") from None
        print(f"wrote {out}", file=sys.stderr)
        return 0
    raise UsageError(f"unknown export target {args.what!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qszego",
        description="Cauchy-Szego kernel construction and verification on the Siegel half space",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sup = argparse.SUPPRESS

    p_eval = sub.add_parser("eval", help="evaluate a kernel at a point")
    p_eval.add_argument("kind", choices=["s", "S", "E", "K", "density", "kernel", "cauchy", "group"])
    p_eval.add_argument("--n", type=int, default=sup)
    p_eval.add_argument("--m", type=int, default=sup)
    p_eval.add_argument("--nu", type=str, default=sup)
    p_eval.add_argument("--q", type=str, default=sup)
    p_eval.add_argument("--omega", type=str, default=sup)
    p_eval.add_argument("--t", type=str, default=sup)
    p_eval.add_argument("--eps", type=float, default=sup)
    p_eval.add_argument("--config", type=str, default="")
    p_eval.add_argument("-o", "--output", type=str, default=sup)
    p_eval.add_argument("--format", choices=["json", "csv"], default=sup)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=list(SUITE_NAMES))
    p_verify.add_argument("--n", type=int, default=sup)
    p_verify.add_argument("--tol", type=float, default=sup)
    p_verify.add_argument("--budget", type=float, default=sup)
    p_verify.add_argument("--seed", type=int, default=sup)
    p_verify.add_argument("--config", type=str, default="")
    p_verify.add_argument("-o", "--output", type=str, default=sup)
    p_verify.add_argument("--format", choices=["json", "csv"], default=sup)

    p_export = sub.add_parser("export", help="export kernels or tables")
    p_export.add_argument("what", choices=["kernel", "table"])
    p_export.add_argument("--what", dest="table", choices=["K-decay", "s-ray"], default=sup)
    p_export.add_argument("--n", type=int, default=sup)
    p_export.add_argument("--m", type=int, default=sup)
    p_export.add_argument("--points", type=int, default=sup)
    p_export.add_argument("--config", type=str, default="")
    p_export.add_argument("-o", "--output", type=str, default=sup)
    p_export.add_argument("--format", choices=["json", "csv"], default=sup)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        args = _apply_config(args, parser)
        if args.command == "eval":
            return cmd_eval(args, parser)
        if args.command == "verify":
            return cmd_verify(args, parser)
        if args.command == "export":
            return cmd_export(args, parser)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
