"""Hermitian linear algebra built on the kernel eigensolver.

All decompositions route through a cyclic complex Jacobi eigensolver so that
the compiled and pure-Python backends produce bit-identical output. Returned
eigenvalues are always sorted in non-increasing order with a stable tie rule.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from ._backend import kernels

SUPPORT_TOL = 1e-12
DEGENERACY_TOL = 1e-9

__all__ = [
    "SUPPORT_TOL",
    "DEGENERACY_TOL",
    "as_hermitian",
    "EigenDecomposition",
    "eig_hermitian",
    "matrix_log",
    "jordan_decompose",
    "quadratic_log_form",
]


def as_hermitian(a, atol: float = 1e-12) -> np.ndarray:
    """Validate a square array as Hermitian and return its exact symmetrization.

    The input must satisfy max|A - A^dag| <= atol entrywise. The returned
    matrix is (A + A^dag)/2, which is Hermitian to the last bit.
    """
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    dev = np.max(np.abs(a - a.conj().T)) if a.size else 0.0
    if dev > atol:
        raise ValueError(
            f"matrix is not Hermitian: max|A - A^dag| = {dev:.3e} exceeds {atol:.1e}"
        )
    h = (a + a.conj().T) / 2.0
    return h


class EigenDecomposition(NamedTuple):
    """Spectral decomposition A = V diag(w) V^dag with w non-increasing."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def eig_hermitian(a) -> EigenDecomposition:
    """Full spectral decomposition of a Hermitian matrix.

    Eigenvalues come back sorted in non-increasing order; ties keep the
    order produced by the rotation sweep (stable sort), which makes the
    output deterministic across repeated calls and across backends.
    """
    a = np.array(a, dtype=np.complex128, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    norm_a = math.sqrt(float(np.sum(np.abs(a) ** 2))) if a.size else 0.0
    w, v, off, sweeps = kernels.jacobi_eigh(a)
    w = np.asarray(w, dtype=np.float64)
    v = np.asarray(v, dtype=np.complex128)
    if off > 1e-13 * norm_a and off > 0.0:
        raise RuntimeError(
            f"eigensolver did not converge after {sweeps} sweeps: "
            f"residual off-diagonal norm {off:.3e} (matrix norm {norm_a:.3e})"
        )
    order = np.argsort(-w, kind="stable")
    return EigenDecomposition(w[order], np.ascontiguousarray(v[:, order]))


def matrix_log(a, support_tol: float = SUPPORT_TOL) -> np.ndarray:
    """Matrix logarithm of a positive semidefinite matrix on its support.

    Eigenvalues at or below support_tol (relative to the largest eigenvalue)
    are treated as exact zeros and contribute nothing; the result acts as
    log(A) on the support of A and as zero on its null space. Natural log.
    """
    w, v = eig_hermitian(a)
    wmax = max(float(w[0]), 0.0) if w.size else 0.0
    if w.size and float(w[-1]) < -support_tol * max(wmax, 1.0):
        raise ValueError(
            f"matrix is not positive semidefinite: min eigenvalue {w[-1]:.3e}"
        )
    logw = np.zeros_like(w)
    on_support = w > support_tol * wmax
    logw[on_support] = np.log(w[on_support])
    out = (v * logw) @ v.conj().T
    return (out + out.conj().T) / 2.0


def jordan_decompose(a) -> tuple[np.ndarray, np.ndarray]:
    """Split a Hermitian matrix into its positive and negative parts.

    Returns (P, N) with A = P - N, both positive semidefinite, and P N = 0.
    """
    w, v = eig_hermitian(a)
    pos = (v * np.maximum(w, 0.0)) @ v.conj().T
    neg = (v * np.maximum(-w, 0.0)) @ v.conj().T
    return (pos + pos.conj().T) / 2.0, (neg + neg.conj().T) / 2.0


def _spectrum_of(x) -> EigenDecomposition:
    """Cached spectrum if x carries one, fresh decomposition otherwise."""
    spec = getattr(x, "spectrum", None)
    if spec is not None:
        return spec
    mat = getattr(x, "mat", x)
    return eig_hermitian(mat)


def quadratic_log_form(sigma, delta, degeneracy_tol: float = DEGENERACY_TOL) -> float:
    """Quadratic form sum_ij |D_ij|^2 (log s_i - log s_j)/(s_i - s_j) at sigma.

    Here D is delta expressed in the eigenbasis of sigma and s_i are the
    eigenvalues of sigma, which must all be positive. Divided differences
    of eigenvalue pairs closer than degeneracy_tol (relative) collapse to
    the limit 1/s_i; diagonal terms contribute D_ii^2 / s_i.
    """
    w, v = _spectrum_of(sigma)
    s = np.asarray(w, dtype=np.float64)
    if s.size == 0:
        return 0.0
    if float(s[-1]) <= 0.0:
        raise ValueError(
            f"matrix must be positive definite: min eigenvalue {s[-1]:.3e}"
        )
    mat = getattr(delta, "mat", delta)
    d_tilde = v.conj().T @ np.asarray(mat, dtype=np.complex128) @ v
    si = s[:, None]
    sj = s[None, :]
    diff = si - sj
    near = np.abs(diff) < degeneracy_tol * np.maximum(si, sj)
    safe = np.where(near, 1.0, diff)
    with np.errstate(divide="ignore", invalid="ignore"):
        coeff = (np.log(si) - np.log(sj)) / safe
    coeff = np.where(near, 1.0 / si, coeff)
    return float(np.sum(np.abs(d_tilde) ** 2 * coeff))
