"""Concurrence, tangle and entanglement of formation for two-qubit states.

The concurrence follows the Wootters construction: lambda_i are the
square roots of the eigenvalues of rho * rho~ with
rho~ = (sy x sy) rho* (sy x sy), computed here through the Hermitian
equivalent sqrt(rho) rho~ sqrt(rho), and
C = max(lambda_1 - lambda_2 - lambda_3 - lambda_4, 0).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linalg import SIGMA_Y, psd_sqrt, tensor

# real symmetric, equals antidiag(-1, 1, 1, -1)
SPIN_FLIP_MATRIX = tensor(SIGMA_Y, SIGMA_Y).real

_CLAMP = 1e-12


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0."""
    if x < -_CLAMP or x > 1 + _CLAMP:
        raise DomainError(f"binary_entropy argument {x!r} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    if x == 0.0 or x == 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1 - x) * np.log2(1 - x))


def spin_flip(rho: np.ndarray) -> np.ndarray:
    """rho~ = (sy x sy) rho* (sy x sy)."""
    return SPIN_FLIP_MATRIX @ rho.conj() @ SPIN_FLIP_MATRIX


def wootters_lambdas(rho: np.ndarray) -> np.ndarray:
    """The four lambda_i, descending.

    lambda_i are the eigenvalues of psd_sqrt(S rho~ S) with
    S = psd_sqrt(rho); since S rho~ S = A^dagger A for A = S^T Y S,
    they equal the singular values of A, which keeps near-zero lambdas
    at absolute machine accuracy (an eigenvalue route would inflate
    them to sqrt(eps)).
    """
    s = psd_sqrt(rho)
    a = s.T @ SPIN_FLIP_MATRIX @ s
    return np.linalg.svd(a, compute_uv=False)


def concurrence(rho: np.ndarray) -> float:
    lam = wootters_lambdas(rho)
    return float(min(max(lam[0] - lam[1] - lam[2] - lam[3], 0.0), 1.0))


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation as a function of concurrence."""
    return binary_entropy((1 + np.sqrt(max(0.0, 1 - c * c))) / 2)


def eof(rho: np.ndarray) -> float:
    return eof_from_concurrence(concurrence(rho))


@dataclass(frozen=True)
class EntanglementReport:
    concurrence: float
    tangle: float
    eof: float
    lambdas: np.ndarray


def report(rho: np.ndarray) -> EntanglementReport:
    """Concurrence, tangle C^2, EOF and the lambda spectrum of a state."""
    lam = wootters_lambdas(rho)
    c = float(min(max(lam[0] - lam[1] - lam[2] - lam[3], 0.0), 1.0))
    return EntanglementReport(
        concurrence=c, tangle=c * c, eof=eof_from_concurrence(c), lambdas=lam
    )
