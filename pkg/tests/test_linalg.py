"""Eigendecomposition and spectral functions, checked against numpy.linalg."""
import math

import numpy as np
import pytest

from relbound.linalg import (
    as_hermitian,
    eig_hermitian,
    jordan_decompose,
    matrix_log,
    quadratic_log_form,
)


def _rand_herm(rng, d):
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (g + g.conj().T) / 2.0


def test_as_hermitian_symmetrizes():
    a = np.array([[1.0, 2.0 + 1e-13j], [2.0 - 1e-13j, 3.0]])
    h = as_hermitian(a)
    assert np.array_equal(h, h.conj().T)


def test_as_hermitian_rejects_nonhermitian():
    with pytest.raises(ValueError, match="not Hermitian"):
        as_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError, match="square"):
        as_hermitian(np.zeros((2, 3)))


def test_eig_diagonal_input():
    w, v = eig_hermitian(np.diag([1.0, -1.0, 0.0]).astype(complex))
    assert np.allclose(w, [1.0, 0.0, -1.0], atol=1e-14)
    assert np.allclose(np.abs(v.conj().T @ v), np.eye(3), atol=1e-13)


def test_eig_identity():
    w, v = eig_hermitian(np.eye(4, dtype=complex))
    assert np.allclose(w, np.ones(4), atol=0)
    assert np.allclose(v.conj().T @ v, np.eye(4), atol=1e-14)


def test_eig_matches_numpy_and_reconstructs():
    rng = np.random.default_rng(3)
    for d in (1, 2, 3, 5, 8):
        for _ in range(10):
            a = _rand_herm(rng, d)
            w, v = eig_hermitian(a)
            scale = max(float(np.max(np.abs(w))), 1.0)
            # eigenvalues against the independent solver, both sorted descending
            ref = np.sort(np.linalg.eigvalsh(a))[::-1]
            assert np.max(np.abs(w - ref)) <= 1e-12 * scale
            # spectral reconstruction and unitarity
            recon = (v * w) @ v.conj().T
            assert np.max(np.abs(recon - a)) <= 1e-10 * scale
            assert np.max(np.abs(v.conj().T @ v - np.eye(d))) <= 1e-10
            assert abs(float(np.sum(w)) - float(np.trace(a).real)) <= 1e-10 * scale


def test_eig_sorted_nonincreasing():
    rng = np.random.default_rng(4)
    for _ in range(25):
        w, _ = eig_hermitian(_rand_herm(rng, 6))
        assert np.all(np.diff(w) <= 0.0)


def test_eig_basis_covariant():
    rng = np.random.default_rng(5)
    a = _rand_herm(rng, 5)
    # unitary from the eigensolver itself, applied to an independent sample
    _, u = eig_hermitian(_rand_herm(rng, 5))
    b = u @ a @ u.conj().T
    wa, _ = eig_hermitian(a)
    wb, _ = eig_hermitian((b + b.conj().T) / 2.0)
    assert np.max(np.abs(wa - wb)) <= 1e-9


def test_eig_deterministic():
    rng = np.random.default_rng(6)
    a = _rand_herm(rng, 5)
    w1, v1 = eig_hermitian(a)
    w2, v2 = eig_hermitian(a)
    assert np.array_equal(w1, w2)
    assert np.array_equal(v1, v2)


def test_matrix_log_identity_is_zero():
    assert np.max(np.abs(matrix_log(np.eye(3, dtype=complex)))) == 0.0


def test_matrix_log_diagonal():
    out = matrix_log(np.diag([math.e, 1.0]).astype(complex))
    assert np.allclose(out, np.diag([1.0, 0.0]), atol=1e-14)


def test_matrix_log_acts_on_support_only():
    out = matrix_log(np.diag([0.5, 0.5, 0.0]).astype(complex))
    assert np.allclose(np.diagonal(out)[:2], math.log(0.5), atol=1e-14)
    assert abs(out[2, 2]) == 0.0


def test_matrix_log_inverts_exp():
    rng = np.random.default_rng(8)
    for _ in range(5):
        h = _rand_herm(rng, 4)
        h *= 5.0 / max(float(np.max(np.abs(np.linalg.eigvalsh(h)))), 1e-12)
        w, v = np.linalg.eigh(h)
        exp_h = (v * np.exp(w)) @ v.conj().T
        assert np.max(np.abs(matrix_log(exp_h) - h)) <= 1e-8


def test_matrix_log_rejects_negative():
    with pytest.raises(ValueError, match="not positive semidefinite"):
        matrix_log(np.diag([1.0, -0.1]).astype(complex))


def test_jordan_reference_split():
    pos, neg = jordan_decompose(np.diag([1.0, -1.0]).astype(complex))
    assert np.allclose(pos, np.diag([1.0, 0.0]), atol=1e-14)
    assert np.allclose(neg, np.diag([0.0, 1.0]), atol=1e-14)


def test_jordan_psd_input():
    a = np.diag([0.3, 0.7]).astype(complex)
    pos, neg = jordan_decompose(a)
    assert np.allclose(pos, a, atol=1e-14)
    assert np.max(np.abs(neg)) <= 1e-14


def test_jordan_properties_random_traceless():
    rng = np.random.default_rng(9)
    for _ in range(10):
        h = _rand_herm(rng, 5)
        h -= (np.trace(h).real / 5) * np.eye(5)
        pos, neg = jordan_decompose(h)
        assert np.max(np.abs(pos - neg - h)) <= 1e-12
        assert float(np.min(np.linalg.eigvalsh(pos))) >= -1e-12
        assert float(np.min(np.linalg.eigvalsh(neg))) >= -1e-12
        assert np.max(np.abs(pos @ neg)) <= 1e-10
        # traceless input splits into equal-trace halves
        assert abs(float(np.trace(pos).real) - float(np.trace(neg).real)) <= 1e-10


def test_quadratic_log_form_commuting_case():
    # sigma = I/2 in d=2: every divided-difference coefficient is 1/(1/2) = 2,
    # so the form equals 2 Tr[Delta^2] = 4 t^2 for Delta = t diag(1, -1)
    sigma = np.eye(2, dtype=complex) / 2.0
    for t in (0.05, 0.2):
        delta = t * np.diag([1.0, -1.0]).astype(complex)
        assert abs(quadratic_log_form(sigma, delta) - 4.0 * t * t) <= 1e-13


def test_quadratic_log_form_zero_delta():
    assert quadratic_log_form(np.diag([0.3, 0.7]).astype(complex), np.zeros((2, 2))) == 0.0


def test_quadratic_log_form_bounded_by_min_eigenvalue():
    rng = np.random.default_rng(10)
    for _ in range(20):
        g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        m = g @ g.conj().T
        sigma = m / float(np.trace(m).real)
        delta = _rand_herm(rng, 4)
        delta -= (np.trace(delta).real / 4) * np.eye(4)
        form = quadratic_log_form(sigma, delta)
        assert form >= 0.0
        lam_min = float(np.min(np.linalg.eigvalsh(sigma)))
        tr_d2 = float(np.sum(np.abs(delta) ** 2))
        assert form <= tr_d2 / lam_min + 1e-9


def test_quadratic_log_form_near_degenerate_stays_finite():
    sigma = np.diag([0.5 + 1e-14, 0.5 - 1e-14]).astype(complex)
    delta = np.array([[0.0, 0.1], [0.1, 0.0]], dtype=complex)
    val = quadratic_log_form(sigma, delta)
    assert abs(val - 2.0 * 0.01 * 2.0) <= 1e-9


def test_quadratic_log_form_rejects_singular():
    with pytest.raises(ValueError, match="positive definite"):
        quadratic_log_form(np.diag([1.0, 0.0]).astype(complex), np.eye(2))
