import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from entpower.errors import NotHermitian, NotPSD
from entpower.gates import random_local_unitary
from entpower.linalg import (
    ID2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    dag,
    hermitian_eig,
    max_abs,
    psd_sqrt,
    tensor,
)
from entpower.states import mems

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_tensor_identity():
    assert max_abs(tensor(ID2, ID2) - np.eye(4)) == 0


def test_tensor_diagonal_paulis():
    assert np.allclose(tensor(SIGMA_Z, SIGMA_Z), np.diag([1, -1, -1, 1]), atol=0)


def test_tensor_sigma_y_pair():
    # hand expansion of the Kronecker product
    want = np.zeros((4, 4), dtype=complex)
    want[0, 3] = -1
    want[1, 2] = 1
    want[2, 1] = 1
    want[3, 0] = -1
    assert max_abs(tensor(SIGMA_Y, SIGMA_Y) - want) == 0


def test_hermitian_eig_diagonal():
    eig = hermitian_eig(np.diag([4.0, 3.0, 2.0, 1.0]).astype(complex))
    assert np.allclose(eig.values, [4, 3, 2, 1], atol=1e-14)


def test_hermitian_eig_sigma_x_block():
    eig = hermitian_eig(tensor(SIGMA_X, ID2))
    assert np.allclose(eig.values, [1, 1, -1, -1], atol=1e-12)


def test_hermitian_eig_pure_mems_rank_one():
    rho = mems(1.0, 0.0)
    eig = hermitian_eig(rho)
    assert np.allclose(eig.values, [1, 0, 0, 0], atol=1e-12)
    # characteristic polynomial vanishes at each reported eigenvalue
    for lam in eig.values:
        assert abs(np.linalg.det(rho - lam * np.eye(4))) < 1e-12


def test_hermitian_eig_rejects_non_hermitian():
    m = np.zeros((4, 4), dtype=complex)
    m[0, 1] = 1.0
    with pytest.raises(NotHermitian):
        hermitian_eig(m)


def test_psd_sqrt_identity_and_diagonal():
    assert max_abs(psd_sqrt(np.eye(4, dtype=complex)) - np.eye(4)) < 1e-14
    r = psd_sqrt(np.diag([4.0, 1.0, 0.0, 0.0]).astype(complex))
    assert max_abs(r - np.diag([2.0, 1.0, 0.0, 0.0])) < 1e-12


def test_psd_sqrt_bell_projector_idempotent():
    v = np.array([0, 1, 1, 0]) / np.sqrt(2)
    proj = np.outer(v, v).astype(complex)
    r = psd_sqrt(proj)
    assert max_abs(r - proj) < 1e-12
    assert max_abs(r @ r - proj) < 1e-12


def test_psd_sqrt_rejects_negative():
    with pytest.raises(NotPSD):
        psd_sqrt(np.diag([1.0, 1.0, 1.0, -1e-6]).astype(complex))


def _random_hermitian(rng):
    g = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
    return (g + g.conj().T) / 2


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_eig_reconstruction(seed):
    h = _random_hermitian(np.random.default_rng(seed))
    eig = hermitian_eig(h)
    v, w = eig.vectors, eig.values
    assert max_abs(v @ np.diag(w) @ dag(v) - h) < 1e-11
    assert max_abs(dag(v) @ v - np.eye(4)) < 1e-12
    assert all(np.diff(w) <= 1e-14)


@settings(max_examples=25, deadline=None)
@given(seeds, seeds)
def test_eigenvalues_invariant_under_local_unitaries(seed, useed):
    h = _random_hermitian(np.random.default_rng(seed))
    u = tensor(random_local_unitary(useed), random_local_unitary(useed + 1))
    w1 = hermitian_eig(h).values
    w2 = hermitian_eig(u @ h @ dag(u)).values
    assert np.abs(w1 - w2).max() < 1e-11


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_psd_sqrt_squares_back(seed):
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    p = g.conj().T @ g
    p = p / np.trace(p).real
    r = psd_sqrt(p)
    assert max_abs(r @ r - p) < 1e-10
    assert max_abs(r - dag(r)) < 1e-12


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_tensor_multiplicative(seed):
    rng = np.random.default_rng(seed)
    a, b, c, d = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
                  for _ in range(4))
    lhs = tensor(a, b) @ tensor(c, d)
    rhs = tensor(a @ c, b @ d)
    assert max_abs(lhs - rhs) < 1e-12
