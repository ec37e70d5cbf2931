"""Unitarily invariant norms of Hermitian matrices and rescaled distances.

Supported norm families: trace, operator, Ky Fan k, and Schatten q. For a
Hermitian argument the singular values are the absolute eigenvalues, so all
norms reduce to functions of the spectrum. The rescaled distance divides by
the norm of the reference difference diag(1, -1, 0, ..., 0), which maps every
norm in the family onto a common [0, 1] scale.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import eig_hermitian
from .states import DensityMatrix

__all__ = [
    "NormKind",
    "TRACE",
    "OPERATOR",
    "ky_fan",
    "schatten",
    "singular_values",
    "norm",
    "norm_from_singular_values",
    "norm_of_reference",
    "rescaled_distance",
    "trace_distance_full",
    "trace_distance_half",
]


@dataclass(frozen=True)
class NormKind:
    """A unitarily invariant norm label.

    family is one of "trace", "operator", "kyfan", "schatten"; k is the
    Ky Fan order (int >= 1) and q the Schatten exponent (float >= 1, may
    be math.inf). String form round-trips through parse(): "trace",
    "operator", "kyfan:3", "schatten:1.5".
    """

    family: str
    k: int | None = None
    q: float | None = None

    def __post_init__(self):
        if self.family in ("trace", "operator"):
            if self.k is not None or self.q is not None:
                raise ValueError(f"{self.family} norm takes no parameter")
        elif self.family == "kyfan":
            if not isinstance(self.k, int) or self.k < 1:
                raise ValueError(f"Ky Fan order must be an integer >= 1: got {self.k!r}")
        elif self.family == "schatten":
            if self.q is None or not (self.q >= 1.0):
                raise ValueError(f"Schatten exponent must be >= 1: got {self.q!r}")
        else:
            raise ValueError(f"unknown norm family {self.family!r}")

    def __str__(self) -> str:
        if self.family == "kyfan":
            return f"kyfan:{self.k}"
        if self.family == "schatten":
            if math.isinf(self.q):
                return "schatten:inf"
            return f"schatten:{self.q:g}"
        return self.family

    @classmethod
    def parse(cls, text: str) -> "NormKind":
        text = text.strip()
        if text == "trace":
            return TRACE
        if text == "operator":
            return OPERATOR
        if text.startswith("kyfan:"):
            try:
                k = int(text.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad Ky Fan order in {text!r}") from None
            return cls("kyfan", k=k)
        if text.startswith("schatten:"):
            raw = text.split(":", 1)[1]
            q = math.inf if raw in ("inf", "Inf", "INF") else float(raw)
            return cls("schatten", q=q)
        raise ValueError(
            f"unknown norm kind {text!r}; expected trace, operator, "
            "kyfan:<k>, or schatten:<q>"
        )


TRACE = NormKind("trace")
OPERATOR = NormKind("operator")


def ky_fan(k: int) -> NormKind:
    return NormKind("kyfan", k=k)


def schatten(q: float) -> NormKind:
    return NormKind("schatten", q=float(q))


def singular_values(a) -> np.ndarray:
    """Singular values of a Hermitian matrix, sorted non-increasing."""
    spec = getattr(a, "spectrum", None)
    if spec is None:
        spec = eig_hermitian(getattr(a, "mat", a))
    sv = np.abs(spec.eigenvalues)
    return np.sort(sv)[::-1]


def norm_from_singular_values(sv: np.ndarray, kind: NormKind) -> float:
    """Evaluate a norm from precomputed non-increasing singular values."""
    sv = np.asarray(sv, dtype=np.float64)
    d = sv.size
    if kind.family == "trace":
        return float(np.sum(sv))
    if kind.family == "operator":
        return float(sv[0]) if d else 0.0
    if kind.family == "kyfan":
        if kind.k > d:
            raise ValueError(f"Ky Fan order {kind.k} exceeds dimension {d}")
        return float(np.sum(sv[: kind.k]))
    # schatten
    if math.isinf(kind.q):
        return float(sv[0]) if d else 0.0
    if kind.q == 1.0:
        return float(np.sum(sv))
    top = float(sv[0]) if d else 0.0
    if top == 0.0:
        return 0.0
    return top * float(np.sum((sv / top) ** kind.q)) ** (1.0 / kind.q)


def norm(a, kind: NormKind) -> float:
    """Unitarily invariant norm of a Hermitian matrix."""
    return norm_from_singular_values(singular_values(a), kind)


def norm_of_reference(kind: NormKind, dim: int) -> float:
    """Norm of the reference difference diag(1, -1, 0, ..., 0) in dimension dim.

    Computed in closed form: its singular values are (1, 1, 0, ..., 0).
    """
    if dim < 2:
        raise ValueError(f"reference difference needs dimension >= 2, got {dim}")
    if kind.family == "trace":
        return 2.0
    if kind.family == "operator":
        return 1.0
    if kind.family == "kyfan":
        if kind.k > dim:
            raise ValueError(f"Ky Fan order {kind.k} exceeds dimension {dim}")
        return 1.0 if kind.k == 1 else 2.0
    if math.isinf(kind.q):
        return 1.0
    return 2.0 ** (1.0 / kind.q)


def rescaled_distance(rho: DensityMatrix, sigma: DensityMatrix, kind: NormKind) -> float:
    """Norm distance between two states divided by the reference norm.

    Lies in [0, 1] for every supported norm kind; clamped against rounding.
    """
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    t = norm(rho.mat - sigma.mat, kind) / norm_of_reference(kind, rho.dim)
    return min(max(t, 0.0), 1.0)


def trace_distance_full(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Trace norm of rho - sigma, in [0, 2]."""
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    return norm(rho.mat - sigma.mat, TRACE)


def trace_distance_half(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Half the trace norm of rho - sigma, in [0, 1]."""
    return 0.5 * trace_distance_full(rho, sigma)
