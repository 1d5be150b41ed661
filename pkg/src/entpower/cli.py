"""Command-line front end.

Subcommands: sweep, verify, mems-curve, state-info.  Sweeps and the
frontier curve emit CSV (12 significant digits, LF line endings);
verify and state-info print human-readable reports.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 I/O error,
4 numeric error.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from .entanglement import report
from .errors import EntpowerError
from .gates import CartanAngles, parse_angle
from .linalg import hermitian_eig
from .states import (
    check_density_matrix,
    mdms,
    mems,
    mems_eof_curve,
    mems_gamma_for_purity,
    purity,
    rho_c,
    rho_diag,
    rho_s,
)
from . import epower

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4

_FAMILY_DEFAULT_SAMPLES = {"cc": 1000, "product": 1_000_000, "analytic": 0}


def _angle(text: str) -> float:
    try:
        return parse_angle(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="entpower",
        description="Entangling power of two-qubit Cartan-kernel gates.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="entangling-power sweep over a purity grid")
    sw.add_argument("--theta-x", type=_angle, required=True)
    sw.add_argument("--theta-y", type=_angle, required=True)
    sw.add_argument("--theta-z", type=_angle, default=0.0)
    sw.add_argument("--family", choices=["cc", "product", "analytic"], required=True)
    sw.add_argument("--mu-min", type=float, default=0.3334)
    sw.add_argument("--mu-max", type=float, default=1.0)
    sw.add_argument("--mu-steps", type=int, default=64)
    sw.add_argument("--samples", type=int, default=None,
                    help="candidates per purity (default 1000 cc, 1e6 product)")
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("--inject-analytic", action="store_true")
    sw.add_argument("--threads", type=int, default=1)
    sw.add_argument("--out", default=None, help="output CSV path (default stdout)")

    ve = sub.add_parser("verify", help="analytic conjugation-identity suite")
    ve.add_argument("--tolerance", type=float, default=1e-12)

    mc = sub.add_parser("mems-curve", help="frontier EOF-versus-purity curve")
    mc.add_argument("--mu-min", type=float, default=0.3334)
    mc.add_argument("--mu-max", type=float, default=1.0)
    mc.add_argument("--mu-steps", type=int, default=64)
    mc.add_argument("--out", default=None)

    si = sub.add_parser("state-info", help="inspect one named family state")
    si.add_argument("--family", required=True,
                    choices=["mems", "mdms", "rho-diag", "rho-s", "rho-c"])
    si.add_argument("--gamma", type=float, default=None)
    si.add_argument("--a", type=float, default=None)
    si.add_argument("--b", type=float, default=None)
    si.add_argument("--phi", type=_angle, default=0.0)
    return ap


def _emit(path, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _num(x: float) -> str:
    return f"{x:.12g}"


def _cmd_sweep(args) -> int:
    samples = args.samples
    if samples is None:
        samples = _FAMILY_DEFAULT_SAMPLES[args.family]
    try:
        gate = CartanAngles(args.theta_x, args.theta_y, args.theta_z)
        config = epower.SweepConfig(
            gate=gate,
            family=epower.FamilyKind(args.family),
            mu_min=args.mu_min,
            mu_max=args.mu_max,
            mu_steps=args.mu_steps,
            samples_per_mu=samples,
            seed=args.seed,
            inject_analytic=args.inject_analytic,
        )
        if args.threads < 1:
            raise EntpowerError("--threads must be >= 1")
    except EntpowerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        curve = epower.sweep(config, threads=args.threads)
    except EntpowerError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    lines = ["mu,ep_eof,ep_tangle,mems_eof,gap,argmax,n_samples"]
    for p in curve.points:
        lines.append(
            f"{_num(p.mu)},{_num(p.ep_eof)},{_num(p.ep_tangle)},"
            f"{_num(p.mems_eof)},{_num(p.gap)},{p.argmax_descriptor},{p.n_samples}"
        )
    try:
        _emit(args.out, "\n".join(lines) + "\n")
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_verify(args) -> int:
    if not args.tolerance > 0:
        print("error: --tolerance must be positive", file=sys.stderr)
        return EXIT_USAGE
    checks = epower.verify_analytic(args.tolerance)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"[{status}] {c.name}: max deviation {c.max_deviation:.3e}")
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed "
          f"at tolerance {args.tolerance:g}")
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


def _cmd_mems_curve(args) -> int:
    try:
        if not (1 / 3 - 1e-9 <= args.mu_min <= args.mu_max <= 1 + 1e-12):
            raise EntpowerError(
                f"mu grid [{args.mu_min!r}, {args.mu_max!r}] outside [1/3, 1]")
        if args.mu_steps < 1 or (args.mu_steps > 1 and args.mu_min >= args.mu_max):
            raise EntpowerError("invalid mu grid")
    except EntpowerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    mus = (np.array([args.mu_min]) if args.mu_steps == 1
           else np.linspace(args.mu_min, args.mu_max, args.mu_steps))
    lines = ["mu,gamma,concurrence,eof"]
    try:
        for mu in mus:
            g = mems_gamma_for_purity(float(mu))
            lines.append(f"{_num(float(mu))},{_num(g)},{_num(g)},{_num(mems_eof_curve(float(mu)))}")
        _emit(args.out, "\n".join(lines) + "\n")
    except EntpowerError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _require(args, names) -> list:
    vals = []
    for n in names:
        v = getattr(args, n)
        if v is None:
            raise EntpowerError(f"--{n} is required for family {args.family!r}")
        vals.append(v)
    return vals


def _cmd_state_info(args) -> int:
    try:
        if args.family == "mems":
            (g,) = _require(args, ["gamma"])
            rho = mems(g, args.phi)
            header = f"mems(gamma={g:g}, phi={args.phi:g})"
        elif args.family == "mdms":
            a, b = _require(args, ["a", "b"])
            rho = mdms(a, b, args.phi)
            header = f"mdms(a={a:g}, b={b:g}, phi={args.phi:g})"
        elif args.family == "rho-diag":
            (a,) = _require(args, ["a"])
            rho = rho_diag(a)
            header = f"rho_diag(a={a:g})"
        elif args.family == "rho-s":
            (g,) = _require(args, ["gamma"])
            rho = rho_s(g)
            header = f"rho_s(gamma={g:g})"
        else:
            (g,) = _require(args, ["gamma"])
            rho = rho_c(g)
            header = f"rho_c(gamma={g:g})"
    except EntpowerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        check_density_matrix(rho)
        rep = report(rho)
        eigs = hermitian_eig(rho).values
        print(header)
        print("matrix (re):")
        for row in rho.real:
            print("  " + "  ".join(f"{x:+.10f}" for x in row))
        print("matrix (im):")
        for row in rho.imag:
            print("  " + "  ".join(f"{x:+.10f}" for x in row))
        print(f"purity: {_num(purity(rho))}")
        print("eigenvalues: " + " ".join(_num(v) for v in eigs))
        print(f"concurrence: {_num(rep.concurrence)}")
        print(f"tangle: {_num(rep.tangle)}")
        print(f"eof: {_num(rep.eof)}")
    except EntpowerError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    if args.command == "sweep":
        return _cmd_sweep(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "mems-curve":
        return _cmd_mems_curve(args)
    return _cmd_state_info(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
