"""Two-qubit density matrices: named families, the frontier curve of
maximal EOF at fixed purity, and purity-constrained samplers for
classical-classical and product states.

Density matrices and probability vectors are plain ndarrays; the
``check_*`` validators enforce the type invariants and are applied by
every constructor here.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import eof_from_concurrence
from .errors import (
    GammaOutOfRange,
    ParamOutOfRange,
    PurityOutOfRange,
    SamplingExhausted,
)
from .linalg import ID2, SIGMA_X, SIGMA_Y, SIGMA_Z, dag, max_abs, tensor

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
EIG_FLOOR = -1e-10
PROB_SUM_TOL = 1e-12
PURITY_TOL = 1e-10

_MAX_REJECTIONS = 10_000


def check_density_matrix(rho: np.ndarray) -> np.ndarray:
    """Validate Hermiticity, unit trace, positivity and purity range."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ParamOutOfRange(f"expected a 4x4 matrix, got shape {rho.shape}")
    if max_abs(rho - dag(rho)) > HERMITICITY_TOL:
        raise ParamOutOfRange("density matrix is not Hermitian within 1e-10")
    if abs(np.trace(rho).real - 1) > TRACE_TOL:
        raise ParamOutOfRange("density matrix trace differs from 1")
    if np.linalg.eigvalsh(rho)[0] < EIG_FLOOR:
        raise ParamOutOfRange("density matrix has an eigenvalue below -1e-10")
    mu = purity(rho)
    if not (0.25 - PURITY_TOL <= mu <= 1 + PURITY_TOL):
        raise ParamOutOfRange(f"purity {mu!r} outside [1/4, 1]")
    return rho


def check_qubit_state(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ParamOutOfRange(f"expected a 2x2 matrix, got shape {rho.shape}")
    if max_abs(rho - dag(rho)) > HERMITICITY_TOL:
        raise ParamOutOfRange("qubit state is not Hermitian within 1e-10")
    if abs(np.trace(rho).real - 1) > TRACE_TOL:
        raise ParamOutOfRange("qubit state trace differs from 1")
    if np.linalg.eigvalsh(rho)[0] < EIG_FLOOR:
        raise ParamOutOfRange("qubit state has an eigenvalue below -1e-10")
    return rho


def check_prob_vector(p: np.ndarray, mu: float | None = None) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (4,) or (p < 0).any():
        raise ParamOutOfRange("probability vector must be 4 nonnegative reals")
    if abs(p.sum() - 1) > PROB_SUM_TOL:
        raise ParamOutOfRange("probabilities must sum to 1 within 1e-12")
    if mu is not None and abs((p * p).sum() - mu) > PURITY_TOL:
        raise ParamOutOfRange(f"sum of squares differs from {mu!r}")
    return p


def purity(rho: np.ndarray) -> float:
    """Tr(rho^2), real part, clamped to [0, 1 + 1e-12]."""
    mu = float(np.trace(rho @ rho).real)
    return min(max(mu, 0.0), 1.0 + 1e-12)


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

def mems(gamma: float, phi: float = 0.0) -> np.ndarray:
    """Maximal-EOF-at-fixed-purity family; concurrence equals gamma.

    Off-diagonal magnitude is gamma/2 (not gamma): that is the only
    choice consistent with the mdms identification on gamma >= 2/3 and
    with unit-trace positivity over the whole range.
    """
    if not (0 <= gamma <= 1 + 1e-12):
        raise GammaOutOfRange(f"gamma={gamma!r} outside [0, 1]")
    g = gamma / 2 if gamma >= 2 / 3 else 1 / 3
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = 1 - 2 * g
    m[1, 1] = m[2, 2] = g
    m[1, 2] = (gamma / 2) * np.exp(-1j * phi)
    m[2, 1] = (gamma / 2) * np.exp(1j * phi)
    return check_density_matrix(m)


def mdms(a: float, b: float, phi: float = 0.0) -> np.ndarray:
    """Maximally-discordant family at 1/2 <= a <= 1, b = 1 - a."""
    if not (0.5 - 1e-12 <= a <= 1 + 1e-12):
        raise ParamOutOfRange(f"a={a!r} outside [1/2, 1]")
    if abs(a + b - 1) > 1e-12:
        raise ParamOutOfRange(f"b={b!r} must equal 1 - a")
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = (1 - a + b) / 2
    m[1, 1] = m[2, 2] = a / 2
    m[1, 2] = (a / 2) * np.exp(-1j * phi)
    m[2, 1] = (a / 2) * np.exp(1j * phi)
    m[3, 3] = (1 - a - b) / 2
    return check_density_matrix(m)


def rho_diag(a: float) -> np.ndarray:
    """Product state diag(1-a, a) on A with B pinned to |0>."""
    if not (0 <= a <= 1 + 1e-12):
        raise ParamOutOfRange(f"a={a!r} outside [0, 1]")
    return check_density_matrix(np.diag([1 - a, 0.0, a, 0.0]).astype(complex))


def rho_s(gamma: float) -> np.ndarray:
    """Diagonal zero-entanglement family diag(1/3, 1/3-g/2, 1/3+g/2, 0)."""
    if not (0 <= gamma <= 2 / 3 + 1e-12):
        raise ParamOutOfRange(f"gamma={gamma!r} outside [0, 2/3]")
    d = [1 / 3, 1 / 3 - gamma / 2, 1 / 3 + gamma / 2, 0.0]
    return check_density_matrix(np.diag(d).astype(complex))


def rho_c(gamma: float) -> np.ndarray:
    """Zero-concurrence X-state with -+i/6 corners, gamma in [0, sqrt(3)/3]."""
    if not (0 <= gamma <= np.sqrt(3) / 3 + 1e-12):
        raise ParamOutOfRange(f"gamma={gamma!r} outside [0, sqrt(3)/3]")
    m = np.diag([1 / 6, 1 / 3 - gamma / 2, 1 / 3 + gamma / 2, 1 / 6]).astype(complex)
    m[0, 3] = -1j / 6
    m[3, 0] = 1j / 6
    return check_density_matrix(m)


# ---------------------------------------------------------------------------
# frontier curve
# ---------------------------------------------------------------------------

def mems_gamma_for_purity(mu: float) -> float:
    """Invert purity(mems(gamma)) on [1/3, 1]; continuous at mu = 5/9."""
    if not (1 / 3 - 1e-12 <= mu <= 1 + 1e-12):
        raise PurityOutOfRange(f"mu={mu!r} outside [1/3, 1]")
    mu = min(max(mu, 1 / 3), 1.0)
    if mu <= 5 / 9:
        return float(np.sqrt(2 * (mu - 1 / 3)))
    return float((1 + np.sqrt(2 * mu - 1)) / 2)


def mems_eof_curve(mu: float) -> float:
    """EOF of the frontier state at purity mu (its concurrence is gamma)."""
    return eof_from_concurrence(mems_gamma_for_purity(mu))


# ---------------------------------------------------------------------------
# measurement bases and samplers
# ---------------------------------------------------------------------------

def basis_vectors(theta: float, phi: float) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal qubit basis {cos t|0> + e^{i p} sin t|1>, complement}."""
    v0 = np.array([np.cos(theta), np.exp(1j * phi) * np.sin(theta)])
    v1 = np.array([-np.exp(-1j * phi) * np.sin(theta), np.cos(theta)])
    return v0, v1


@dataclass(frozen=True)
class MeasurementBasisPair:
    """Local measurement bases for qubits A and B."""

    alpha_theta: float
    alpha_phi: float
    beta_theta: float
    beta_phi: float

    def alpha(self) -> tuple[np.ndarray, np.ndarray]:
        return basis_vectors(self.alpha_theta, self.alpha_phi)

    def beta(self) -> tuple[np.ndarray, np.ndarray]:
        return basis_vectors(self.beta_theta, self.beta_phi)


def sample_prob_vectors(mu: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """n probability 4-vectors with sum p = 1 and sum p^2 = mu, shape (n, 4).

    Draw q uniformly on the simplex; walk from the barycenter toward q
    (or, when the target is purer than q, from q toward its largest
    vertex) to the exact purity shell.  Both walks keep all components
    nonnegative; the rejection loop is a numerical safety net only.
    """
    if not (0.25 - 1e-12 <= mu <= 1 + 1e-12):
        raise PurityOutOfRange(f"mu={mu!r} outside [1/4, 1]")
    mu = min(max(mu, 0.25), 1.0)
    out = np.empty((n, 4))
    todo = np.arange(n)
    for _ in range(_MAX_REJECTIONS):
        m = len(todo)
        q = rng.standard_exponential((m, 4))
        q /= q.sum(axis=1, keepdims=True)
        sq = (q * q).sum(axis=1)
        p = np.empty_like(q)
        lo = sq >= mu
        if lo.any():
            t = np.sqrt((mu - 0.25) / (sq[lo] - 0.25))
            p[lo] = 0.25 * (1 - t[:, None]) + t[:, None] * q[lo]
        hi = ~lo
        if hi.any():
            qh = q[hi]
            qmax = qh.max(axis=1)
            a = 1 - 2 * qmax + sq[hi]
            b = 2 * (qmax - sq[hi])
            c = sq[hi] - mu
            s = np.zeros_like(qmax)
            pos = a > 1e-300
            s[pos] = (-b[pos] + np.sqrt(np.clip(b[pos] ** 2 - 4 * a[pos] * c[pos], 0, None))) / (2 * a[pos])
            s[~pos] = 1.0
            ph = (1 - s[:, None]) * qh
            ph[np.arange(len(qh)), qh.argmax(axis=1)] += s
            p[hi] = ph
        p[(p > -1e-15) & (p < 0)] = 0.0  # round-off at the boundary
        good = (p >= 0).all(axis=1)
        out[todo[good]] = p[good]
        todo = todo[~good]
        if len(todo) == 0:
            return out
    raise SamplingExhausted(f"could not satisfy the purity constraint at mu={mu!r}")


def sample_prob_vector(mu: float, seed: int) -> np.ndarray:
    """Single probability vector at purity mu, deterministic per seed."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    p = sample_prob_vectors(mu, 1, rng)[0]
    return check_prob_vector(p, mu=mu)


def cc_state(basis: MeasurementBasisPair, p: np.ndarray) -> np.ndarray:
    """sum_ij p_ij |a_i><a_i| x |b_j><b_j| over the given product bases."""
    p = check_prob_vector(p)
    a = basis.alpha()
    b = basis.beta()
    rho = np.zeros((4, 4), dtype=complex)
    for k, (i, j) in enumerate(((0, 0), (0, 1), (1, 0), (1, 1))):
        v = tensor(np.outer(a[i], a[i].conj()), np.outer(b[j], b[j].conj()))
        rho += p[k] * v
    return check_density_matrix(rho)


def sample_bloch_directions(n: int, rng: np.random.Generator) -> np.ndarray:
    """n unit vectors uniform on the sphere (cos-theta and azimuth draws)."""
    ct = rng.uniform(-1, 1, n)
    ph = rng.uniform(0, 2 * np.pi, n)
    st = np.sqrt(np.clip(1 - ct * ct, 0, None))
    return np.stack([st * np.cos(ph), st * np.sin(ph), ct], axis=1)


def qubit_state(mu: float, direction) -> np.ndarray:
    """Single-qubit state of purity mu with Bloch vector along direction."""
    if not (0.5 - 1e-12 <= mu <= 1 + 1e-12):
        raise PurityOutOfRange(f"qubit purity {mu!r} outside [1/2, 1]")
    d = np.asarray(direction, dtype=float)
    norm = np.linalg.norm(d)
    if not np.isfinite(norm) or norm == 0:
        raise ParamOutOfRange("direction must be a nonzero 3-vector")
    d = d / norm
    r = np.sqrt(max(0.0, 2 * min(mu, 1.0) - 1))
    rho = (ID2 + r * (d[0] * SIGMA_X + d[1] * SIGMA_Y + d[2] * SIGMA_Z)) / 2
    return check_qubit_state(rho)


def product_state(mu_a: float, mu_b: float, dir_a, dir_b) -> np.ndarray:
    """rho_A x rho_B with per-qubit purities mu_a, mu_b; total mu_a*mu_b."""
    return check_density_matrix(
        tensor(qubit_state(mu_a, dir_a), qubit_state(mu_b, dir_b))
    )
