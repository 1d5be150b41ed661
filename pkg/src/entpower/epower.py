"""Entangling-power maximization engine.

For a gate U and purity mu, the entangling power is the maximum EOF of
U rho U^dagger over zero-entanglement states rho of purity mu.  The
engine evaluates sampled candidate pools (classical-classical or
product families) plus optional closed-form candidates, exhaustively
and deterministically.

Hot path: for any factorization rho = W W^dagger, the Wootters lambdas
of U rho U^dagger are the singular values of (UW)^T (sy x sy) (UW), so
each candidate costs one small matrix product and one 4x4 SVD.  For a
classical-classical candidate W = V diag(sqrt p) with V the product
basis, and for a product candidate W = sqrt(rho_A) x sqrt(rho_B).
Candidate streams are a pure function of (seed, purity-grid index,
cell index, sample index), so results do not depend on how work is
partitioned across threads.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .entanglement import SPIN_FLIP_MATRIX, concurrence, eof_from_concurrence
from .errors import EmptyPool, ParamOutOfRange, PurityOutOfRange
from .gates import CartanAngles, apply_gate, cartan_kernel
from .linalg import max_abs, psd_sqrt
from .states import (
    MeasurementBasisPair,
    basis_vectors,
    cc_state,
    mdms,
    mems,
    mems_eof_curve,
    mems_gamma_for_purity,
    product_state,
    rho_c,
    rho_diag,
    rho_s,
    sample_prob_vectors,
)

ZERO_ENTANGLEMENT_TOL = 1e-10

_CC_CHUNK_SAMPLES = 16384  # batch granularity for the cc hot loop

# Basis grid for the classical-classical family: the Bloch polar angle
# of |alpha_0> is discretized in steps of 0.1*pi over one hemisphere
# (state angle theta = Theta/2 in [0, pi/4]); label-swapped bases cover
# the other hemisphere, so every basis set on the sphere is reachable.
# The azimuth uses steps of 0.1*pi over [0, 2*pi).
CC_THETA_GRID = np.arange(6) * 0.05 * np.pi
CC_PHI_GRID = np.arange(20) * 0.1 * np.pi

PRODUCT_MU_A_STEP = 0.01


class FamilyKind(str, Enum):
    CC = "cc"
    PRODUCT = "product"
    ANALYTIC = "analytic"


@dataclass(frozen=True)
class SweepConfig:
    gate: CartanAngles
    family: FamilyKind
    mu_min: float = 1 / 3
    mu_max: float = 1.0
    mu_steps: int = 64
    samples_per_mu: int = 1000
    seed: int = 0
    inject_analytic: bool = False

    def __post_init__(self):
        if not (1 / 3 - 1e-9 <= self.mu_min <= self.mu_max <= 1 + 1e-12):
            raise PurityOutOfRange(
                f"need 1/3 <= mu_min <= mu_max <= 1, got [{self.mu_min!r}, {self.mu_max!r}]"
            )
        if self.mu_steps < 1:
            raise ParamOutOfRange("mu_steps must be >= 1")
        if self.mu_steps > 1 and not self.mu_min < self.mu_max:
            raise ParamOutOfRange("mu grid with several steps needs mu_min < mu_max")
        if self.samples_per_mu < 0:
            raise ParamOutOfRange("samples_per_mu must be nonnegative")


@dataclass(frozen=True)
class SweepPoint:
    mu: float
    ep_eof: float
    ep_tangle: float
    mems_eof: float
    gap: float
    argmax_descriptor: str
    n_samples: int


@dataclass(frozen=True)
class SweepCurve:
    config: SweepConfig
    points: tuple


@dataclass(frozen=True)
class AnalyticCheck:
    name: str
    max_deviation: float
    passed: bool


def _fmt(x) -> str:
    return repr(float(x))


def _vec(v) -> str:
    return "|".join(_fmt(x) for x in v)


def _cell_rng(seed: int, mu_index: int, cell_index: int) -> np.random.Generator:
    ss = np.random.SeedSequence((int(seed), int(mu_index), int(cell_index)))
    return np.random.Generator(np.random.PCG64(ss))


def _allocate(total: int, ncells: int) -> np.ndarray:
    base, rem = divmod(int(total), ncells)
    counts = np.full(ncells, base, dtype=np.int64)
    counts[:rem] += 1
    return counts


def _concurrences(amats: np.ndarray) -> np.ndarray:
    """max(0, 2*max sv - sum sv) for a batch of 4x4 matrices."""
    sv = np.linalg.svd(amats, compute_uv=False)
    return np.maximum(0.0, 2 * sv[:, 0] - sv.sum(axis=1))


def _cc_cells() -> list:
    return [
        (ta, pa, tb, pb)
        for ta in CC_THETA_GRID
        for pa in CC_PHI_GRID
        for tb in CC_THETA_GRID
        for pb in CC_PHI_GRID
    ]


def _cc_pattern_k(yt, cell) -> np.ndarray:
    """K = V^T (U^T Y U) V for one product-basis pattern."""
    ta, pa, tb, pb = cell
    a0, a1 = basis_vectors(ta, pa)
    b0, b1 = basis_vectors(tb, pb)
    v = np.stack([np.kron(x, y) for x in (a0, a1) for y in (b0, b1)], axis=1)
    return v.T @ yt @ v


def _check_cc_inputs(p: np.ndarray) -> None:
    # Zero-entanglement precondition.  A product-basis mixture has flip
    # spectrum {m, m, w, w} with m = sqrt(p00 p11), w = sqrt(p01 p10),
    # so its concurrence is max(0, -2 min(m, w)) exactly.
    m = np.sqrt(p[:, 0] * p[:, 3])
    w = np.sqrt(p[:, 1] * p[:, 2])
    c_in = np.maximum(0.0, 2 * np.maximum(m, w) - 2 * (m + w))
    if c_in.max(initial=0.0) > ZERO_ENTANGLEMENT_TOL:
        raise ParamOutOfRange("classical-classical candidate is entangled")


def _cc_chunk_best(yt, cells, cell_ids, counts, mu, seed, mu_index):
    """Best candidate per cell for a chunk of cells.

    All candidates of the chunk go through one batched SVD; per-sample
    results are bitwise independent of the chunk layout.
    """
    mats, ps, bounds = [], [], [0]
    for ci in cell_ids:
        n = int(counts[ci])
        rng = _cell_rng(seed, mu_index, ci)
        p = sample_prob_vectors(mu, n, rng)
        _check_cc_inputs(p)
        k = _cc_pattern_k(yt, cells[ci])
        sp = np.sqrt(p)
        mats.append(k[None, :, :] * (sp[:, :, None] * sp[:, None, :]))
        ps.append(p)
        bounds.append(bounds[-1] + n)
    c = _concurrences(np.concatenate(mats, axis=0))
    out = []
    for i, ci in enumerate(cell_ids):
        seg = c[bounds[i]:bounds[i + 1]]
        j = int(seg.argmax())
        out.append((ci, float(seg[j]), j, ps[i][j]))
    return out


def _product_mu_a_grid(mu: float) -> np.ndarray:
    lo = max(0.5, mu)
    hi = min(1.0, 2 * mu)
    vals = []
    k = 0
    while True:
        v = lo + PRODUCT_MU_A_STEP * k
        if v > hi + 1e-12:
            break
        vals.append(min(v, hi))
        k += 1
    if not vals or vals[-1] < hi - 1e-9:
        vals.append(hi)
    return np.array(vals)


def _qubit_sqrt_batch(r: float, ct, ph) -> np.ndarray:
    """sqrt of (I + r n.sigma)/2 for unit Bloch directions (cos-theta, azimuth)."""
    st = np.sqrt(np.clip(1 - ct * ct, 0, None))
    nx, ny, nz = st * np.cos(ph), st * np.sin(ph), ct
    c0 = (np.sqrt((1 + r) / 2) + np.sqrt((1 - r) / 2)) / 2
    c1 = (np.sqrt((1 + r) / 2) - np.sqrt((1 - r) / 2)) / 2
    out = np.empty((len(ct), 2, 2), dtype=complex)
    out[:, 0, 0] = c0 + c1 * nz
    out[:, 1, 1] = c0 - c1 * nz
    out[:, 0, 1] = c1 * (nx - 1j * ny)
    out[:, 1, 0] = c1 * (nx + 1j * ny)
    return out


def _product_cell_best(yt, mu_a, mu_b, n, rng):
    """Best candidate in one (mu_a, mu_b) cell: (c, sample index, directions)."""
    ra = np.sqrt(max(0.0, 2 * mu_a - 1))
    rb = np.sqrt(max(0.0, 2 * mu_b - 1))
    cta = rng.uniform(-1, 1, n)
    pha = rng.uniform(0, 2 * np.pi, n)
    ctb = rng.uniform(-1, 1, n)
    phb = rng.uniform(0, 2 * np.pi, n)
    # Product states have a fourfold-degenerate flip spectrum at
    # sqrt(det rho_A det rho_B), hence concurrence max(0, -2 sqrt(...)).
    s = np.sqrt((1 - ra * ra) * (1 - rb * rb)) / 4
    if max(0.0, -2 * s) > ZERO_ENTANGLEMENT_TOL:
        raise ParamOutOfRange("product candidate is entangled")
    sa = _qubit_sqrt_batch(ra, cta, pha)
    sb = _qubit_sqrt_batch(rb, ctb, phb)
    w = np.einsum("nij,nkl->nikjl", sa, sb).reshape(n, 4, 4)
    amats = np.matmul(np.transpose(w, (0, 2, 1)), np.matmul(yt[None], w))
    c = _concurrences(amats)
    j = int(c.argmax())
    dir_a = np.array([np.sqrt(1 - cta[j] ** 2) * np.cos(pha[j]),
                      np.sqrt(1 - cta[j] ** 2) * np.sin(pha[j]), cta[j]])
    dir_b = np.array([np.sqrt(1 - ctb[j] ** 2) * np.cos(phb[j]),
                      np.sqrt(1 - ctb[j] ** 2) * np.sin(phb[j]), ctb[j]])
    return float(c[j]), j, (dir_a, dir_b)


def _analytic_candidates(mu: float) -> list:
    """Closed-form candidates applicable at this purity, in fixed order."""
    out = []
    if mu <= 5 / 9:
        g = mems_gamma_for_purity(mu)
        out.append((f"analytic rho_s gamma={_fmt(g)}", rho_s(g)))
    if mu >= 5 / 9:
        a = mems_gamma_for_purity(mu)
        out.append((f"analytic rho_diag a={_fmt(a)}", rho_diag(a)))
    if mu <= 0.5:
        g = float(np.sqrt(2 * (mu - 1 / 3)))
        out.append((f"analytic rho_c gamma={_fmt(g)}", rho_c(g)))
    return out


def _evaluate_states(yt, rhos) -> np.ndarray:
    """Concurrence of U rho U^dagger for explicit states (W = sqrt(rho))."""
    amats = np.stack([(s := psd_sqrt(r)).T @ yt @ s for r in rhos])
    return _concurrences(amats)


def entangling_power(
    gate: CartanAngles,
    mu: float,
    family: FamilyKind,
    samples: int,
    seed: int,
    inject_analytic: bool = False,
    *,
    mu_index: int = 0,
    threads: int = 1,
) -> SweepPoint:
    """Maximum EOF of U rho U^dagger over the generated candidate pool."""
    if not (1 / 3 - 1e-9 <= mu <= 1 + 1e-12):
        raise PurityOutOfRange(f"mu={mu!r} outside [1/3, 1]")
    mu = min(max(mu, 1 / 3), 1.0)
    family = FamilyKind(family)
    u = cartan_kernel(gate).matrix
    yt = u.T @ SPIN_FLIP_MATRIX @ u

    best_c = -1.0
    best_idx = -1
    best_desc = ""
    n_mc = 0

    if family is not FamilyKind.ANALYTIC:
        per_cell = []  # (cell id, best c, sample index in cell, metadata)
        if family is FamilyKind.CC:
            cells = _cc_cells()
            counts = _allocate(samples, len(cells))
            active = np.flatnonzero(counts)
            chunks, acc, load = [], [], 0
            for ci in active:
                acc.append(int(ci))
                load += int(counts[ci])
                if load >= _CC_CHUNK_SAMPLES:
                    chunks.append(acc)
                    acc, load = [], 0
            if acc:
                chunks.append(acc)

            def run(cell_ids):
                return _cc_chunk_best(yt, cells, cell_ids, counts, mu, seed, mu_index)

            if threads > 1 and len(chunks) > 1:
                with ThreadPoolExecutor(max_workers=threads) as ex:
                    parts = list(ex.map(run, chunks))
            else:
                parts = [run(ch) for ch in chunks]
            for part in parts:
                per_cell.extend(part)

            def describe(ci, p):
                ta, pa, tb, pb = cells[ci]
                return (f"cc theta_a={_fmt(ta)} phi_a={_fmt(pa)} "
                        f"theta_b={_fmt(tb)} phi_b={_fmt(pb)} p={_vec(p)}")
        else:
            grid = _product_mu_a_grid(mu)
            counts = _allocate(samples, len(grid))
            active = np.flatnonzero(counts)

            def run(ci):
                rng = _cell_rng(seed, mu_index, int(ci))
                mu_a = float(grid[ci])
                c, j, dirs = _product_cell_best(yt, mu_a, mu / mu_a, int(counts[ci]), rng)
                return int(ci), c, j, dirs

            if threads > 1 and len(active) > 1:
                with ThreadPoolExecutor(max_workers=threads) as ex:
                    per_cell = list(ex.map(run, active))
            else:
                per_cell = [run(ci) for ci in active]

            def describe(ci, dirs):
                da, db = dirs
                mu_a = float(grid[ci])
                return (f"product mu_a={_fmt(mu_a)} mu_b={_fmt(mu / mu_a)} "
                        f"dir_a={_vec(da)} dir_b={_vec(db)}")

        offsets = np.concatenate([[0], np.cumsum(counts)])
        per_cell.sort(key=lambda r: r[0])  # merge in cell order: deterministic
        for ci, c, j, meta in per_cell:
            idx = int(offsets[ci]) + j
            if c > best_c or (c == best_c and idx < best_idx):
                best_c, best_idx, best_desc = c, idx, describe(ci, meta)
        n_mc = int(counts.sum())

    injected = _analytic_candidates(mu) if (inject_analytic or family is FamilyKind.ANALYTIC) else []
    if injected:
        for desc, rho in injected:
            if concurrence(rho) > ZERO_ENTANGLEMENT_TOL:
                raise ParamOutOfRange(f"injected candidate is entangled: {desc}")
        cs = _evaluate_states(yt, [rho for _, rho in injected])
        for k, (desc, _) in enumerate(injected):
            c, idx = float(cs[k]), n_mc + k
            if c > best_c or (c == best_c and idx < best_idx):
                best_c, best_idx, best_desc = c, idx, desc

    if best_idx < 0:
        raise EmptyPool(f"no candidates generated at mu={mu!r}")

    best_c = min(max(best_c, 0.0), 1.0)
    ep = eof_from_concurrence(best_c)
    frontier = mems_eof_curve(mu)
    return SweepPoint(
        mu=mu,
        ep_eof=ep,
        ep_tangle=best_c * best_c,
        mems_eof=frontier,
        gap=frontier - ep,
        argmax_descriptor=best_desc,
        n_samples=n_mc + len(injected),
    )


def sweep(config: SweepConfig, threads: int = 1) -> SweepCurve:
    """One SweepPoint per value of the uniform, endpoint-inclusive mu grid."""
    if config.mu_steps == 1:
        mus = np.array([config.mu_min])
    else:
        mus = np.linspace(config.mu_min, config.mu_max, config.mu_steps)
    points = tuple(
        entangling_power(
            config.gate,
            float(m),
            config.family,
            config.samples_per_mu,
            config.seed,
            config.inject_analytic,
            mu_index=i,
            threads=threads,
        )
        for i, m in enumerate(mus)
    )
    return SweepCurve(config=config, points=points)


def gap_to_mems(curve: SweepCurve) -> list:
    """Per-point (mu, frontier EOF minus achieved EOF)."""
    return [(p.mu, p.mems_eof - p.ep_eof) for p in curve.points]


def verify_analytic(tolerance: float) -> list:
    """Entrywise checks of the closed-form conjugation identities."""
    if not tolerance > 0:
        raise ParamOutOfRange("tolerance must be positive")
    u8 = cartan_kernel(CartanAngles(np.pi / 8, np.pi / 8, 0.0))
    checks = []

    a_grid = np.arange(0.5, 1.0 + 1e-9, 0.1)
    dev = max(
        max_abs(apply_gate(u8, rho_diag(a)) - mdms(a, 1 - a, np.pi / 2))
        for a in a_grid
    )
    checks.append(AnalyticCheck("Uc(pi/8,pi/8,0) rho_diag(a) -> mdms(a,1-a,pi/2)",
                                dev, dev <= tolerance))

    g_grid = list(np.arange(0.0, 0.6 + 1e-9, 0.1)) + [2 / 3]
    dev = max(
        max_abs(apply_gate(u8, rho_s(g)) - mems(g, np.pi / 2)) for g in g_grid
    )
    checks.append(AnalyticCheck("Uc(pi/8,pi/8,0) rho_s(g) -> mems(g,pi/2)",
                                dev, dev <= tolerance))

    gc_grid = list(np.arange(0.0, 0.5 + 1e-9, 0.1)) + [float(np.sqrt(3) / 3)]
    for chi in (0.0, 0.3, np.pi / 4, 1.1):
        u = cartan_kernel(CartanAngles(np.pi / 4, 0.0, chi))
        dev = max(
            max_abs(apply_gate(u, rho_c(g)) - mems(g, np.pi / 2)) for g in gc_grid
        )
        checks.append(AnalyticCheck(
            f"Uc(pi/4,0,chi) rho_c(g) -> mems(g,pi/2) [chi={chi:.6g}]",
            dev, dev <= tolerance))

    dev = 0.0
    for a in a_grid:
        ref = apply_gate(u8, rho_diag(a))
        for chi in (0.3, np.pi / 4, 1.1):
            u = cartan_kernel(CartanAngles(np.pi / 8, np.pi / 8, chi))
            dev = max(dev, max_abs(apply_gate(u, rho_diag(a)) - ref))
    checks.append(AnalyticCheck("Uc(pi/8,pi/8,chi) rho_diag(a) independent of chi",
                                dev, dev <= tolerance))
    return checks


def state_from_descriptor(text: str) -> np.ndarray:
    """Rebuild the input state encoded by an argmax descriptor."""
    parts = text.split()
    kind = parts[0]
    kv = {}
    for tok in parts[1:]:
        key, _, val = tok.partition("=")
        kv[key] = val
    if kind == "cc":
        basis = MeasurementBasisPair(
            alpha_theta=float(kv["theta_a"]),
            alpha_phi=float(kv["phi_a"]),
            beta_theta=float(kv["theta_b"]),
            beta_phi=float(kv["phi_b"]),
        )
        p = np.array([float(x) for x in kv["p"].split("|")])
        return cc_state(basis, p)
    if kind == "product":
        da = [float(x) for x in kv["dir_a"].split("|")]
        db = [float(x) for x in kv["dir_b"].split("|")]
        return product_state(float(kv["mu_a"]), float(kv["mu_b"]), da, db)
    if kind == "analytic":
        fam = parts[1]
        if fam == "rho_s":
            return rho_s(float(kv["gamma"]))
        if fam == "rho_diag":
            return rho_diag(float(kv["a"]))
        if fam == "rho_c":
            return rho_c(float(kv["gamma"]))
    raise ParamOutOfRange(f"unrecognized descriptor {text!r}")
