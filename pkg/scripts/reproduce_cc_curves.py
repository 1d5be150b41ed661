#!/usr/bin/env python3
"""Entangling power versus purity on classical-classical inputs.

Runs the four kernel gates over the purity interval with the
1000-samples-per-basis-pattern protocol and writes one CSV per gate
plus the frontier reference curve.  Scale --per-pattern down (e.g. 10)
for a quick look.
"""
import argparse
import sys
from pathlib import Path

from entpower import cli

GATES = {
    "pi8_pi8": ("pi/8", "pi/8"),
    "pi4_0": ("pi/4", "0"),
    "pi4_pi4": ("pi/4", "pi/4"),
    "0.1pi_0": ("0.3141592653589793", "0"),
}
PATTERNS = 14_400


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="results_cc")
    ap.add_argument("--per-pattern", type=int, default=1000)
    ap.add_argument("--mu-steps", type=int, default=21)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    samples = args.per_pattern * PATTERNS

    rc = cli.main([
        "mems-curve", "--mu-min", "0.3334", "--mu-max", "1.0",
        "--mu-steps", str(args.mu_steps), "--out", str(out / "frontier.csv"),
    ])
    if rc:
        return rc
    for name, (tx, ty) in GATES.items():
        path = out / f"cc_{name}.csv"
        print(f"sweeping {name} ({samples} candidates per purity) -> {path}")
        rc = cli.main([
            "sweep", "--theta-x", tx, "--theta-y", ty, "--theta-z", "0",
            "--family", "cc", "--mu-min", "0.3334", "--mu-max", "1.0",
            "--mu-steps", str(args.mu_steps), "--samples", str(samples),
            "--seed", str(args.seed), "--out", str(path),
        ])
        if rc:
            return rc
    return 0


if __name__ == "__main__":
    sys.exit(main())
