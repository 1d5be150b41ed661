"""Cartan-kernel two-qubit unitaries and local-unitary utilities.

The kernel U(tx, ty, tz) = exp(-i sum_k t_k sigma_k x sigma_k) decomposes
into two 2x2 blocks: on span{|00>, |11>} it acts as
exp(-i tz) [cos(tx - ty) I - i sin(tx - ty) swap], and on
span{|01>, |10>} as exp(+i tz) [cos(tx + ty) I - i sin(tx + ty) swap],
which is what ``cartan_kernel`` builds directly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import AngleOutOfRange, ParamOutOfRange
from .linalg import dag, max_abs

_RANGE_SLACK = 1e-12
UNITARITY_TOL = 1e-12


@dataclass(frozen=True)
class CartanAngles:
    """Kernel parameters (radians), each in [0, pi/2]."""

    theta_x: float
    theta_y: float
    theta_z: float = 0.0

    def __post_init__(self):
        for name, t in (("theta_x", self.theta_x), ("theta_y", self.theta_y),
                        ("theta_z", self.theta_z)):
            if not (-_RANGE_SLACK <= t <= np.pi / 2 + _RANGE_SLACK):
                raise AngleOutOfRange(f"{name}={t!r} outside [0, pi/2]")

    @property
    def canonical(self) -> bool:
        """Whether 0 <= theta_z <= theta_y <= theta_x <= pi/4."""
        s = _RANGE_SLACK
        return (-s <= self.theta_z <= self.theta_y + s
                and self.theta_y <= self.theta_x + s
                and self.theta_x <= np.pi / 4 + s)

    def label(self) -> str:
        return f"Uc({self.theta_x:.6g},{self.theta_y:.6g},{self.theta_z:.6g})"


@dataclass(frozen=True)
class TwoQubitGate:
    matrix: np.ndarray
    label: str

    def __post_init__(self):
        u = self.matrix
        if max_abs(dag(u) @ u - np.eye(4)) > UNITARITY_TOL:
            raise ParamOutOfRange("matrix is not unitary to 1e-12")


def cartan_kernel(angles: CartanAngles) -> TwoQubitGate:
    """exp(-i (tx sx.sx + ty sy.sy + tz sz.sz)) in closed block form."""
    tx, ty, tz = angles.theta_x, angles.theta_y, angles.theta_z
    u = np.zeros((4, 4), dtype=complex)
    outer = np.exp(-1j * tz)
    inner = np.exp(1j * tz)
    u[0, 0] = u[3, 3] = outer * np.cos(tx - ty)
    u[0, 3] = u[3, 0] = outer * -1j * np.sin(tx - ty)
    u[1, 1] = u[2, 2] = inner * np.cos(tx + ty)
    u[1, 2] = u[2, 1] = inner * -1j * np.sin(tx + ty)
    return TwoQubitGate(matrix=u, label=angles.label())


def apply_gate(gate: TwoQubitGate, rho: np.ndarray) -> np.ndarray:
    """U rho U^dagger, re-symmetrized as (M + M^dagger)/2."""
    u = gate.matrix if isinstance(gate, TwoQubitGate) else gate
    out = u @ rho @ dag(u)
    return (out + dag(out)) / 2


def random_local_unitary(seed: int) -> np.ndarray:
    """Haar-distributed 2x2 unitary, deterministic for a fixed seed.

    Gram-Schmidt on a complex Gaussian pair (equivalent to QR with a
    positive diagonal), which carries the Haar measure.
    """
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q0 = g[:, 0] / np.linalg.norm(g[:, 0])
    v = g[:, 1] - np.vdot(q0, g[:, 1]) * q0
    q1 = v / np.linalg.norm(v)
    return np.stack([q0, q1], axis=1)


_PI_LITERAL = re.compile(r"^(\d+)?pi(?:/(\d+))?$")


def parse_angle(text: str) -> float:
    """Angle literal: decimal radians, 'pi/N' or 'Mpi/N' fractions of pi."""
    s = text.strip()
    m = _PI_LITERAL.match(s)
    if m:
        num = int(m.group(1)) if m.group(1) else 1
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ValueError(f"invalid angle literal {text!r}")
        return num * np.pi / den
    try:
        return float(s)
    except ValueError:
        raise ValueError(f"invalid angle literal {text!r}") from None
