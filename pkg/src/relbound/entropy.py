"""Entropic and fidelity distance measures with explicit support handling.

All logarithms are natural. Relative entropy accepts unnormalized positive
semidefinite inputs and returns math.inf when the support of the first
argument is not contained in the support of the second.
"""
from __future__ import annotations

import math

import numpy as np

from .linalg import SUPPORT_TOL, as_hermitian, eig_hermitian
from .states import DensityMatrix

__all__ = [
    "von_neumann_entropy",
    "relative_entropy",
    "relative_entropy_gradient",
    "fidelity",
    "bures_distance",
]


def _psd_spectrum(x, support_tol: float, name: str):
    """Spectrum of a PSD input (DensityMatrix or raw Hermitian array).

    Rejects eigenvalues below -support_tol relative to the spectral radius;
    tiny negatives inside the tolerance are clamped to zero.
    """
    spec = getattr(x, "spectrum", None)
    if spec is None:
        spec = eig_hermitian(as_hermitian(x, atol=1e-10))
    w = spec.eigenvalues
    scale = float(np.max(np.abs(w))) if w.size else 0.0
    if w.size and float(w[-1]) < -support_tol * max(scale, 1.0):
        raise ValueError(
            f"{name} is not positive semidefinite: min eigenvalue {w[-1]:.3e}"
        )
    return np.maximum(w, 0.0), spec.eigenvectors


def von_neumann_entropy(rho) -> float:
    """Entropy -sum lambda_i log lambda_i with 0 log 0 = 0."""
    w, _ = _psd_spectrum(rho, SUPPORT_TOL, "rho")
    pos = w[w > 0.0]
    return float(-np.sum(pos * np.log(pos)))


def relative_entropy(rho, sigma, support_tol: float = SUPPORT_TOL) -> float:
    """Relative entropy Tr[rho (log rho - log sigma)], possibly +infinity.

    Inputs may be unnormalized PSD matrices. The result is +infinity exactly
    when some eigenvector of rho with eigenvalue above support_tol (relative)
    has squared projection above support_tol onto the null space of sigma.
    Values within 1e-10 below zero are clamped to 0; larger negative values
    are genuine (possible for unnormalized inputs) and returned as-is.
    """
    lam, u = _psd_spectrum(rho, support_tol, "rho")
    s, v = _psd_spectrum(sigma, support_tol, "sigma")
    if lam.size != s.size:
        raise ValueError(f"dimension mismatch: {lam.size} vs {s.size}")

    lam_max = float(lam[0]) if lam.size else 0.0
    if lam_max <= 0.0:
        return 0.0
    s_max = float(s[0]) if s.size else 0.0
    if s_max <= 0.0:
        return math.inf

    rho_support = lam > support_tol * lam_max
    sigma_null = s <= support_tol * s_max

    overlap = np.abs(u.conj().T @ v) ** 2
    if np.any(sigma_null):
        leak = overlap[:, sigma_null].sum(axis=1)
        if np.any(leak[rho_support] > support_tol):
            return math.inf

    pos = lam[lam > 0.0]
    term1 = float(np.sum(pos * np.log(pos)))
    keep = ~sigma_null
    weights = lam @ overlap[:, keep]
    term2 = float(np.sum(weights * np.log(s[keep])))
    value = term1 - term2
    if -1e-10 < value < 0.0:
        return 0.0
    return value


def relative_entropy_gradient(rho: DensityMatrix, sigma: DensityMatrix) -> np.ndarray:
    """Gradient 1 + log rho - log sigma of the relative entropy in rho.

    Both states must be positive definite. For traceless Hermitian Delta,
    Tr[Delta x gradient] is the directional derivative of
    relative_entropy(rho + eps Delta, sigma) at eps = 0.
    """
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    for name, state in (("rho", rho), ("sigma", sigma)):
        if state.min_eigenvalue <= 0.0:
            raise ValueError(
                f"{name} must be positive definite: "
                f"min eigenvalue {state.min_eigenvalue:.3e}"
            )
    lw, lv = rho.spectrum
    sw, sv = sigma.spectrum
    log_rho = (lv * np.log(lw)) @ lv.conj().T
    log_sigma = (sv * np.log(sw)) @ sv.conj().T
    grad = np.eye(rho.dim, dtype=np.complex128) + log_rho - log_sigma
    return (grad + grad.conj().T) / 2.0


def fidelity(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)), in [0, 1]."""
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    w, v = rho.spectrum
    sqrt_rho = (v * np.sqrt(np.maximum(w, 0.0))) @ v.conj().T
    inner = sqrt_rho @ sigma.mat @ sqrt_rho
    iw, _ = eig_hermitian((inner + inner.conj().T) / 2.0)
    f = float(np.sum(np.sqrt(np.maximum(iw, 0.0))))
    return min(max(f, 0.0), 1.0)


def bures_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Bures distance 2 sqrt(1 - F), in [0, 2]."""
    return 2.0 * math.sqrt(max(1.0 - fidelity(rho, sigma), 0.0))
