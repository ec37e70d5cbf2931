"""Closed-form lower and upper bounds on the relative entropy of states.

Conventions matter here: different bounds bind different distance measures.
Each function documents whether it consumes the full trace norm, the halved
trace distance, the Schatten-2 norm, the operator norm, or the rescaled
unitarily invariant distance. The aggregate BoundReport carries all four
trace-like T values explicitly so nothing is silently reused.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .linalg import SUPPORT_TOL, eig_hermitian
from .entropy import relative_entropy
from .norms import (
    NormKind,
    norm_from_singular_values,
    norm_of_reference,
    rescaled_distance,
    trace_distance_full,
)
from .states import DensityMatrix

__all__ = [
    "s_of_x",
    "SMinCurve",
    "smin_curve",
    "lower_bound_sharp",
    "lower_bound_pinsker",
    "upper_bound_brat",
    "upper_bound_minus_log_beta",
    "upper_bound_quadratic",
    "upper_bound_log",
    "fannes_correction",
    "fannes_bound",
    "upper_bound_sharp_d2",
    "upper_bound_sharp_dgt2",
    "BoundReport",
    "CSV_HEADER",
    "bound_report",
    "approx_convergence_rate",
]

_INV_E = 1.0 / math.e


def _xlogy(a: float, b: float) -> float:
    """a * log(b) extended by 0 * log(0) := 0."""
    if a == 0.0:
        return 0.0
    return a * math.log(b)


def s_of_x(x: float) -> float:
    """Smallest relative entropy of binary distributions at fixed shift x.

    Minimizes (r+x) log((r+x)/r) + (1-r-x) log((1-r-x)/(1-r)) over
    r in (0, 1-x) by golden-section search to |dr| < 1e-12. Small-x series:
    2 x^2 + (4/9) x^4 + (32/135) x^6 + O(x^8).
    """
    x = float(x)
    if x < 0.0 or x >= 1.0:
        raise ValueError(f"x must lie in [0, 1): got {x!r}")
    if x == 0.0:
        return 0.0
    value, _ = kernels.smin_golden(x, 1e-12)
    return float(value)


@dataclass(frozen=True)
class SMinCurve:
    """Tabulated (x, s(x)) pairs plus the conventions they were computed under."""

    grid: tuple
    conventions: dict = field(
        default_factory=lambda: {
            "distance": "rescaled unitarily invariant norm distance",
            "reference": "diag(1, -1, 0, ..., 0)",
            "log": "natural",
        }
    )


def smin_curve(xs) -> SMinCurve:
    """Evaluate s(x) on a grid of x values in [0, 1)."""
    grid = tuple((float(x), s_of_x(x)) for x in xs)
    return SMinCurve(grid=grid)


def lower_bound_sharp(rho: DensityMatrix, sigma: DensityMatrix, kind: NormKind) -> float:
    """Sharp lower bound s(T) with T the rescaled distance in the given norm.

    Distances within 1e-9 of 1 are clamped just below 1; since s is
    nondecreasing the clamped value is still a valid lower bound, and it
    stays finite even for orthogonal pure states.
    """
    t = rescaled_distance(rho, sigma, kind)
    return s_of_x(min(t, 1.0 - 1e-9))


def lower_bound_pinsker(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Quadratic lower bound (1/2) (Tr|rho - sigma|)^2."""
    t_full = trace_distance_full(rho, sigma)
    return 0.5 * t_full * t_full


def _require_pd(sigma: DensityMatrix) -> float:
    beta = sigma.min_eigenvalue
    if beta <= 0.0:
        raise ValueError(
            f"sigma must be positive definite: min eigenvalue {beta:.3e}"
        )
    return beta


def upper_bound_brat(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Operator-norm upper bound ||rho - sigma||_inf / lambda_min(sigma)."""
    beta = _require_pd(sigma)
    w, _ = eig_hermitian(rho.mat - sigma.mat)
    t_op = float(np.max(np.abs(w))) if w.size else 0.0
    return t_op / beta


def upper_bound_minus_log_beta(sigma: DensityMatrix) -> float:
    """Distance-independent upper bound -log lambda_min(sigma)."""
    return -math.log(_require_pd(sigma))


def upper_bound_quadratic(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Quadratic upper bound ||rho - sigma||_2^2 / lambda_min(sigma)."""
    beta = _require_pd(sigma)
    diff = rho.mat - sigma.mat
    t2_sq = float(np.sum(np.abs(diff) ** 2).real)
    return t2_sq / beta


def fannes_correction(t: float) -> float:
    """Continuity correction: -t log t for t <= 1/e, constant 1/e beyond.

    The naive min(-t log t, 1/e) fails for t > 1 where -t log t turns
    negative; the constant branch keeps the correction a valid envelope
    on the whole range t >= 0.
    """
    if t <= 0.0:
        return 0.0
    if t <= _INV_E:
        return -t * math.log(t)
    return _INV_E


def fannes_bound(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Entropy-difference bound T log d + correction(T), T = Tr|rho - sigma|."""
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    t_full = trace_distance_full(rho, sigma)
    return t_full * math.log(rho.dim) + fannes_correction(t_full)


def _upper_log_value(t_full: float, beta: float, dim: int) -> float:
    return (
        t_full * math.log(dim)
        + fannes_correction(t_full)
        - 0.5 * t_full * math.log(beta)
    )


def upper_bound_log(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Upper bound T log d + correction(T) - (T/2) log beta, T = Tr|rho - sigma|."""
    beta = _require_pd(sigma)
    t_full = trace_distance_full(rho, sigma)
    return _upper_log_value(t_full, beta, rho.dim)


def _d2_low_branch(T: float, beta: float) -> float:
    """d=2 expression valid for T <= beta."""
    return (T + 1.0 - beta) * math.log((T + 1.0 - beta) / (1.0 - beta)) + _xlogy(
        beta - T, (beta - T) / beta
    )


def _d2_high_branch(T: float, beta: float) -> float:
    """d=2 expression valid for T > beta: max over the two extremal pairs.

    At fixed distance T and smallest second-state eigenvalue beta, the
    relative entropy is maximised either by a pure first state carrying
    weight w = (T^2 - beta^2)/(1 - 2 beta) on the small eigenvector, or by
    a pair that is diagonal in a common basis. Both configurations are
    attainable, so the maximum of the two expressions is sharp.
    """
    w = (T * T - beta * beta) / (1.0 - 2.0 * beta)
    pure = -(w * math.log(beta) + (1.0 - w) * math.log1p(-beta))
    diag = (beta + T) * math.log(1.0 + T / beta) + _xlogy(
        1.0 - beta - T, (1.0 - beta - T) / (1.0 - beta)
    )
    return max(pure, diag)


def upper_bound_sharp_d2(T: float, beta: float) -> float:
    """Sharp two-dimensional upper bound as a function of (T, beta).

    T is the rescaled unitarily invariant distance (all norm kinds agree
    in dimension two) and beta the smallest eigenvalue of the second state.
    Requires 0 <= beta <= 1/2 and 0 <= T <= 1 - beta. Evaluates the T <= beta
    branch or the maximum of the two T > beta expressions; the branches agree
    at T = beta. Returns +infinity when beta = 0 and T > 0.
    """
    T = float(T)
    beta = float(beta)
    if not 0.0 <= beta <= 0.5:
        raise ValueError(f"beta must lie in [0, 1/2]: got {beta!r}")
    if not 0.0 <= T <= 1.0 - beta:
        raise ValueError(f"T must lie in [0, 1 - beta] = [0, {1.0 - beta!r}]: got {T!r}")
    if T == 0.0:
        return 0.0
    if beta == 0.0:
        return math.inf
    if T <= beta:
        return _d2_low_branch(T, beta)
    return _d2_high_branch(T, beta)


def _dgt2_low_branch(T: float, beta: float) -> float:
    """d>2 expression valid for T <= beta."""
    return _xlogy(beta + T, (beta + T) / beta) + _xlogy(beta - T, (beta - T) / beta)


def _dgt2_high_branch(T: float, beta: float) -> float:
    """d>2 expression valid for T > beta."""
    return (beta + T) * math.log((beta + T) / beta)


def upper_bound_sharp_dgt2(T: float, beta: float) -> float:
    """Sharp upper bound for dimension > 2 as a function of (T, beta).

    T is the HALVED trace distance. Requires beta >= 0 and
    0 <= T <= 1 - beta. Sharp for T <= 1 - 2 beta; on (1 - 2 beta, 1 - beta]
    it remains a valid upper bound but sharpness is unproven. Returns
    +infinity when beta = 0 and T > 0.
    """
    T = float(T)
    beta = float(beta)
    if beta < 0.0:
        raise ValueError(f"beta must be >= 0: got {beta!r}")
    if not 0.0 <= T <= 1.0 - beta:
        raise ValueError(f"T must lie in [0, 1 - beta] = [0, {1.0 - beta!r}]: got {T!r}")
    if T == 0.0:
        return 0.0
    if beta == 0.0:
        return math.inf
    if T <= beta:
        return _dgt2_low_branch(T, beta)
    return _dgt2_high_branch(T, beta)


CSV_HEADER = (
    "dim,beta,T_half,T_full,T_s2,T_op,exact,lower_s,lower_pinsker,"
    "up_brat,up_logbeta,up_quad,up_log,up_sharp"
)


def _fmt(x) -> str:
    if isinstance(x, int):
        return str(x)
    if math.isinf(x):
        return "+inf"
    return format(float(x), ".15g")


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "+inf"
    return x


@dataclass(frozen=True)
class BoundReport:
    """Every bound evaluated on one pair of states, with all T conventions."""

    dim: int
    beta: float
    T_trace_half: float
    T_trace_full: float
    T_schatten2: float
    T_operator: float
    exact_S: float
    lower_s: float
    lower_pinsker: float
    upper_brat: float
    upper_minus_log_beta: float
    upper_quad: float
    upper_log: float
    upper_sharp: float
    approx_small_T: float
    sharpness: str
    extra_norms: tuple = ()

    def to_json_dict(self) -> dict:
        out = {
            "dim": self.dim,
            "beta": self.beta,
            "T_trace_half": self.T_trace_half,
            "T_trace_full": self.T_trace_full,
            "T_schatten2": self.T_schatten2,
            "T_operator": self.T_operator,
            "exact_S": _jsonable(self.exact_S),
            "lower_s": self.lower_s,
            "lower_pinsker": self.lower_pinsker,
            "upper_brat": _jsonable(self.upper_brat),
            "upper_minus_log_beta": _jsonable(self.upper_minus_log_beta),
            "upper_quad": _jsonable(self.upper_quad),
            "upper_log": _jsonable(self.upper_log),
            "upper_sharp": _jsonable(self.upper_sharp),
            "approx_small_T": _jsonable(self.approx_small_T),
            "sharpness": self.sharpness,
        }
        if self.extra_norms:
            out["extra_norms"] = [dict(e) for e in self.extra_norms]
        return out

    def csv_row(self) -> str:
        cells = [
            self.dim,
            self.beta,
            self.T_trace_half,
            self.T_trace_full,
            self.T_schatten2,
            self.T_operator,
            self.exact_S,
            self.lower_s,
            self.lower_pinsker,
            self.upper_brat,
            self.upper_minus_log_beta,
            self.upper_quad,
            self.upper_log,
            self.upper_sharp,
        ]
        return ",".join(_fmt(c) for c in cells)


def bound_report(rho: DensityMatrix, sigma: DensityMatrix, extra_kinds=()) -> BoundReport:
    """Evaluate the exact relative entropy and every bound on one pair.

    Bounds that require a positive definite sigma report +infinity when the
    smallest eigenvalue of sigma is at or below the support tolerance, so the
    report never raises for valid (possibly singular) states. extra_kinds is
    an optional sequence of NormKind whose rescaled distances and sharp lower
    bounds are attached under extra_norms.
    """
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    d = rho.dim
    w, _ = eig_hermitian(rho.mat - sigma.mat)
    sv = np.sort(np.abs(w))[::-1]
    t_full = float(np.sum(sv))
    t_half = 0.5 * t_full
    t_s2 = float(math.sqrt(np.sum(sv * sv)))
    t_op = float(sv[0]) if sv.size else 0.0
    beta = max(sigma.min_eigenvalue, 0.0)

    exact = relative_entropy(rho, sigma)
    lower_s = s_of_x(min(t_half, 1.0 - 1e-9))
    lower_pinsker = 0.5 * t_full * t_full

    pd = beta > SUPPORT_TOL
    up_brat = t_op / beta if pd else math.inf
    up_logbeta = -math.log(beta) if pd else math.inf
    up_quad = t_s2 * t_s2 / beta if pd else math.inf
    up_log = _upper_log_value(t_full, beta, d) if pd else math.inf

    t_eff = min(t_half, max(1.0 - beta, 0.0))
    if not pd:
        up_sharp = 0.0 if t_eff == 0.0 else math.inf
        approx = 0.0 if t_eff == 0.0 else math.inf
    elif d == 2:
        up_sharp = upper_bound_sharp_d2(t_eff, min(beta, 0.5))
        approx = t_eff * t_eff / (2.0 * beta * (1.0 - beta))
    else:
        up_sharp = upper_bound_sharp_dgt2(t_eff, beta)
        approx = t_eff * t_eff / beta

    if d == 2 or t_eff <= 1.0 - 2.0 * beta:
        sharpness = "sharp"
    else:
        sharpness = "valid upper bound, sharpness unproven"

    extras = []
    for kind in extra_kinds:
        t_kind = norm_from_singular_values(sv, kind) / norm_of_reference(kind, d)
        t_kind = min(max(t_kind, 0.0), 1.0)
        extras.append(
            {
                "kind": str(kind),
                "T": t_kind,
                "lower_s": s_of_x(min(t_kind, 1.0 - 1e-9)),
            }
        )

    return BoundReport(
        dim=d,
        beta=beta,
        T_trace_half=t_half,
        T_trace_full=t_full,
        T_schatten2=t_s2,
        T_operator=t_op,
        exact_S=exact,
        lower_s=lower_s,
        lower_pinsker=lower_pinsker,
        upper_brat=up_brat,
        upper_minus_log_beta=up_logbeta,
        upper_quad=up_quad,
        upper_log=up_log,
        upper_sharp=up_sharp,
        approx_small_T=approx,
        sharpness=sharpness,
        extra_norms=tuple(extras),
    )


def approx_convergence_rate(T_n, beta_n) -> dict:
    """Track the product T_n |log beta_n| along a sequence of approximations.

    Returns the products, whether their tail (second half) is nonincreasing,
    a converges/diverges verdict for the tail heading to zero at the sampled
    horizon, and the sharp d>2 upper bounds where applicable (None when
    T_n > 1 - beta_n puts the bound out of range).
    """
    T_n = [float(t) for t in T_n]
    beta_n = [float(b) for b in beta_n]
    if not T_n or len(T_n) != len(beta_n):
        raise ValueError(
            f"sequences must be nonempty and equal length: {len(T_n)} vs {len(beta_n)}"
        )
    for t in T_n:
        if not 0.0 <= t <= 1.0:
            raise ValueError(f"T values must lie in [0, 1]: got {t!r}")
    for b in beta_n:
        if not 0.0 < b <= 1.0:
            raise ValueError(f"beta values must lie in (0, 1]: got {b!r}")

    products = [t * abs(math.log(b)) for t, b in zip(T_n, beta_n)]
    bounds = [
        upper_bound_sharp_dgt2(t, b) if t <= 1.0 - b else None
        for t, b in zip(T_n, beta_n)
    ]
    tail = products[len(products) // 2 :]
    tail_noninc = all(b <= a + 1e-12 for a, b in zip(tail, tail[1:]))
    vanishing = products[-1] <= 1e-12 or products[-1] <= 0.5 * max(products)
    verdict = "converges" if (tail_noninc and vanishing) else "diverges"
    return {
        "products": products,
        "tail_nonincreasing": tail_noninc,
        "verdict": verdict,
        "s_upper_bounds": bounds,
    }
