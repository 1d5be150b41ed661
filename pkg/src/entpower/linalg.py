"""Dense complex linear algebra for 2x2 and 4x4 matrices.

All matrices are plain complex ndarrays.  Two-qubit operators use the
basis order |00>, |01>, |10>, |11> with the first index belonging to
qubit A, i.e. ``tensor(a, b) == np.kron(a, b)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotPSD

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
ID2 = np.eye(2, dtype=complex)
ID4 = np.eye(4, dtype=complex)

HERMITICITY_TOL = 1e-10
PSD_EIG_FLOOR = -1e-12


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, qubit A first."""
    return np.kron(a, b)


def dag(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def max_abs(m: np.ndarray) -> float:
    """Entrywise max-norm."""
    return float(np.abs(m).max())


@dataclass(frozen=True)
class EigenSystem:
    """Hermitian eigendecomposition, eigenvalues sorted descending.

    ``vectors[:, i]`` is the (orthonormal) eigenvector for ``values[i]``.
    """

    values: np.ndarray
    vectors: np.ndarray


def hermitian_eig(h: np.ndarray) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, descending eigenvalues.

    Raises NotHermitian if ``max_abs(h - dag(h)) > 1e-10``.
    """
    h = np.asarray(h, dtype=complex)
    if max_abs(h - dag(h)) > HERMITICITY_TOL:
        raise NotHermitian(f"matrix is not Hermitian within {HERMITICITY_TOL:g}")
    w, v = np.linalg.eigh(h)
    return EigenSystem(values=w[::-1].copy(), vectors=v[:, ::-1].copy())


def psd_sqrt(p: np.ndarray) -> np.ndarray:
    """Hermitian square root of a positive-semidefinite matrix.

    Eigenvalues in [-1e-12, 0) are clamped to zero; anything more
    negative raises NotPSD.
    """
    eig = hermitian_eig(p)
    w = eig.values
    if w[-1] < PSD_EIG_FLOOR:
        raise NotPSD(f"eigenvalue {w[-1]:.3e} below {PSD_EIG_FLOOR:g}")
    w = np.clip(w, 0.0, None)
    r = (eig.vectors * np.sqrt(w)) @ dag(eig.vectors)
    return (r + dag(r)) / 2
