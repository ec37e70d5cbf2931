"""Density matrices, reference states, random sampling, and matrix JSON IO."""
from __future__ import annotations

import json

import numpy as np

from .linalg import EigenDecomposition, as_hermitian, eig_hermitian

__all__ = [
    "DensityMatrix",
    "special_E",
    "special_F",
    "pure_state",
    "random_density",
    "random_density_min_eig",
    "state_delta",
    "as_state_delta",
    "matrix_to_json",
    "matrix_from_json",
    "save_matrix_json",
    "load_matrix_json",
    "load_density_json",
]


class DensityMatrix:
    """A validated density matrix with an eagerly cached eigendecomposition.

    Construction checks Hermiticity (1e-12 entrywise), unit trace (1e-12),
    and positive semidefiniteness (eigenvalues >= -1e-12). The spectrum is
    computed once and reused by norms, entropies, and bound evaluation.
    """

    __slots__ = ("mat", "spectrum")

    def __init__(self, mat):
        h = as_hermitian(mat)
        tr = float(np.trace(h).real)
        if abs(tr - 1.0) > 1e-12:
            raise ValueError(f"trace must be 1: got {tr!r}")
        spec = eig_hermitian(h)
        if spec.eigenvalues.size and float(spec.eigenvalues[-1]) < -1e-12:
            raise ValueError(
                "matrix is not positive semidefinite: "
                f"min eigenvalue {spec.eigenvalues[-1]:.3e}"
            )
        self.mat: np.ndarray = h
        self.spectrum: EigenDecomposition = spec

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.spectrum.eigenvalues

    @property
    def min_eigenvalue(self) -> float:
        """Smallest eigenvalue, unclamped (may be a tiny negative)."""
        return float(self.spectrum.eigenvalues[-1])

    def __repr__(self) -> str:  # pragma: no cover
        return f"DensityMatrix(dim={self.dim})"

    def to_json(self) -> dict:
        return matrix_to_json(self.mat)

    @classmethod
    def from_json(cls, obj: dict) -> "DensityMatrix":
        return cls(matrix_from_json(obj))


def special_E(d: int) -> np.ndarray:
    """Rank-one reference projector diag(1, 0, ..., 0) in dimension d."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    e = np.zeros((d, d), dtype=np.complex128)
    e[0, 0] = 1.0
    return e


def special_F(d: int) -> np.ndarray:
    """Traceless reference diag(1, -1, 0, ..., 0) in dimension d >= 2."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    f = np.zeros((d, d), dtype=np.complex128)
    f[0, 0] = 1.0
    f[1, 1] = -1.0
    return f


def pure_state(v) -> DensityMatrix:
    """Projector onto a (not necessarily normalized) nonzero vector."""
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    n2 = float(np.vdot(v, v).real)
    if n2 <= 0.0:
        raise ValueError("state vector must be nonzero")
    return DensityMatrix(np.outer(v, v.conj()) / n2)


def _as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_density(d: int, seed=None) -> DensityMatrix:
    """Full-rank random density matrix from the Ginibre ensemble."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    rng = _as_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    return DensityMatrix(m / float(np.trace(m).real))


def random_density_min_eig(d: int, beta: float, seed=None) -> DensityMatrix:
    """Random density matrix whose smallest eigenvalue is at least beta.

    Mixes a Ginibre sample with beta * identity; requires 0 <= beta <= 1/d.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if beta < 0.0 or beta > 1.0 / d:
        raise ValueError(f"beta must lie in [0, 1/d] = [0, {1.0 / d!r}]: got {beta!r}")
    rng = _as_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    m /= float(np.trace(m).real)
    out = beta * np.eye(d, dtype=np.complex128) + (1.0 - d * beta) * m
    return DensityMatrix(out)


def state_delta(rho: DensityMatrix, sigma: DensityMatrix) -> np.ndarray:
    """Difference rho - sigma as a plain Hermitian array."""
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    return rho.mat - sigma.mat


def as_state_delta(a, atol: float = 1e-12) -> np.ndarray:
    """Validate a Hermitian traceless perturbation."""
    h = as_hermitian(a, atol=atol)
    tr = abs(complex(np.trace(h)))
    if tr > atol:
        raise ValueError(f"perturbation must be traceless: |trace| = {tr:.3e}")
    return h


def matrix_to_json(a) -> dict:
    """Serialize a square complex matrix to {dim, re, im} with full precision."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return {
        "dim": int(a.shape[0]),
        "re": a.real.tolist(),
        "im": a.imag.tolist(),
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    """Rebuild a complex matrix from the {dim, re, im} JSON form."""
    d = int(obj["dim"])
    re = np.asarray(obj["re"], dtype=np.float64)
    im = np.asarray(obj["im"], dtype=np.float64)
    if re.shape != (d, d) or im.shape != (d, d):
        raise ValueError(
            f"matrix JSON shape mismatch: dim={d}, re {re.shape}, im {im.shape}"
        )
    return re + 1j * im


def save_matrix_json(path, a) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_json(a), fh)
        fh.write("\n")


def load_matrix_json(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_json(json.load(fh))


def load_density_json(path) -> DensityMatrix:
    """Load and validate a density matrix from a matrix JSON file."""
    return DensityMatrix(load_matrix_json(path))
