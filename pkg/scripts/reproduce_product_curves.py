#!/usr/bin/env python3
"""Entangling power versus purity on product-state inputs.

Sweeps the four kernel gates over the (mu_A, mu_B) band at 0.01 steps
with random Bloch directions, one CSV per gate plus the frontier curve.
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


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="results_product")
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--mu-steps", type=int, default=21)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    rc = cli.main([
        "mems-curve", "--mu-min", "0.3334", "--mu-max", "1.0",
        "--mu-steps", str(args.mu_steps), "--out", str(out / "frontier.csv"),
    ])
    if rc:
        return rc
    for name, (tx, ty) in GATES.items():
        path = out / f"product_{name}.csv"
        print(f"sweeping {name} ({args.samples} candidates per purity) -> {path}")
        rc = cli.main([
            "sweep", "--theta-x", tx, "--theta-y", ty, "--theta-z", "0",
            "--family", "product", "--mu-min", "0.3334", "--mu-max", "1.0",
            "--mu-steps", str(args.mu_steps), "--samples", str(args.samples),
            "--seed", str(args.seed), "--out", str(path),
        ])
        if rc:
            return rc
    return 0


if __name__ == "__main__":
    sys.exit(main())
