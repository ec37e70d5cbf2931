"""Extremal state constructions and numerical checks around the bounds.

This module builds explicit state pairs that saturate the sharp upper and
lower bounds, the two-level family refuting a quadratic-times-log upper
bound, a grid verification that the two-dimensional maximizer sits at an
endpoint of the rank-one parameter, and a finite-difference probe of the
second derivative of relative entropy against its closed quadratic form.
"""
from __future__ import annotations

import math

import numpy as np

from ._backend import kernels
from .bounds import s_of_x, upper_bound_sharp_d2, upper_bound_sharp_dgt2
from .entropy import relative_entropy
from .linalg import eig_hermitian, quadratic_log_form
from .states import DensityMatrix, as_state_delta

__all__ = [
    "witness_lower",
    "witness_upper_T_le_beta",
    "witness_upper_T_gt_beta",
    "counterexample_bad_bound",
    "extremal_psi_check_d2",
    "second_derivative_check",
]


def _diag_state(entries, d: int) -> DensityMatrix:
    m = np.zeros((d, d), dtype=np.complex128)
    for i, v in enumerate(entries):
        m[i, i] = v
    return DensityMatrix(m)


def witness_lower(x: float, d: int) -> tuple[DensityMatrix, DensityMatrix]:
    """Diagonal pair achieving the sharp lower bound at rescaled distance x.

    Returns (rho, sigma) = diag(r*+x, 1-r*-x, 0, ...) vs diag(r*, 1-r*, 0, ...)
    with r* the minimizer defining s(x); their relative entropy is s(x) and
    their rescaled distance is x in every supported norm kind.
    """
    x = float(x)
    if x < 0.0 or x >= 1.0:
        raise ValueError(f"x must lie in [0, 1): got {x!r}")
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if x == 0.0:
        r_star = 0.5
    else:
        _, r_star = kernels.smin_golden(x, 1e-12)
    rho = _diag_state([r_star + x, 1.0 - r_star - x], d)
    sigma = _diag_state([r_star, 1.0 - r_star], d)
    return rho, sigma


def witness_upper_T_le_beta(
    T: float, beta: float, d: int
) -> tuple[DensityMatrix, DensityMatrix]:
    """Pair saturating the d > 2 sharp upper bound on its T <= beta branch.

    sigma = beta * I + eta |e3><e3| with eta = 1 - d beta, and
    rho = sigma + T * diag(1, -1, 0, ...). Requires d >= 3 and
    0 <= T <= beta <= 1/d.
    """
    T = float(T)
    beta = float(beta)
    if d < 3:
        raise ValueError(f"dimension must be >= 3, got {d}")
    if not 0.0 <= T <= beta:
        raise ValueError(f"need 0 <= T <= beta: got T={T!r}, beta={beta!r}")
    eta = 1.0 - d * beta
    if eta < 0.0:
        raise ValueError(f"need beta <= 1/d for unit trace: got beta={beta!r}, d={d}")
    sig = [beta] * d
    sig[2] = beta + eta
    rho = list(sig)
    rho[0] += T
    rho[1] -= T
    return _diag_state(rho, d), _diag_state(sig, d)


def witness_upper_T_gt_beta(
    T: float, beta: float, d: int, J: int
) -> tuple[DensityMatrix, DensityMatrix]:
    """Pair saturating the d > 2 sharp upper bound on its T > beta branch.

    rho = Diag(T+beta, 0, 0 x J, beta x K, beta+eta) and
    sigma = Diag(beta, T-J beta, beta x J, beta x K, beta+eta) with
    K = d-3-J and eta = 1 - T - (d-1-J) beta. The trace distance is
    Tr|rho - sigma| = 2T and S(rho||sigma) = (T+beta) log((T+beta)/beta).
    """
    T = float(T)
    beta = float(beta)
    if d < 3:
        raise ValueError(f"dimension must be >= 3, got {d}")
    if not isinstance(J, int) or not 0 <= J <= d - 3:
        raise ValueError(f"J must be an integer in [0, d-3] = [0, {d - 3}]: got {J!r}")
    if J * beta > T:
        raise ValueError(f"need J*beta <= T: got J*beta={J * beta!r}, T={T!r}")
    eta = 1.0 - T - (d - 1 - J) * beta
    if eta < 0.0:
        raise ValueError(
            f"need T <= 1 - (d-1-J)*beta for unit trace: got T={T!r}, "
            f"limit={1.0 - (d - 1 - J) * beta!r}"
        )
    if not beta <= T <= 1.0 - 2.0 * beta:
        raise ValueError(
            f"need beta <= T <= 1 - 2*beta: got T={T!r}, beta={beta!r}"
        )
    K = d - 3 - J
    rho = [T + beta, 0.0] + [0.0] * J + [beta] * K + [beta + eta]
    sig = [beta, T - J * beta] + [beta] * J + [beta] * K + [beta + eta]
    return _diag_state(rho, d), _diag_state(sig, d)


def _binary_rel_ent(p: float, q: float) -> float:
    """Relative entropy of (p, 1-p) against (q, 1-q), scalars in (0, 1)."""
    return p * math.log(p / q) + (1.0 - p) * math.log((1.0 - p) / (1.0 - q))


def counterexample_bad_bound(r: float) -> tuple[float, float, float]:
    """Two-level counterexample to the bound r * Tr[(rho-sigma)^2] |log q|.

    For any r > 0 there are diagonal qubit states (p, 1-p), (q, 1-q) whose
    relative entropy exceeds r * 2 (p-q)^2 |log q|. q is chosen so that
    -4 r q log q = 1/2 (capped at 1/4), then p = q + eps is found by scanning
    eps downward geometrically from 1e-2. Returns (p, q, margin) with
    margin = S - r * 2 (p-q)^2 |log q| > 0.
    """
    r = float(r)
    if r <= 0.0:
        raise ValueError(f"r must be > 0: got {r!r}")

    target = 0.5
    hi = 1.0 / math.e
    if -4.0 * r * hi * math.log(hi) <= target:
        q = 0.25
    else:
        lo = 1e-300
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if -4.0 * r * mid * math.log(mid) < target:
                lo = mid
            else:
                hi = mid
        q = min(0.25, 0.5 * (lo + hi))

    abs_log_q = abs(math.log(q))
    for k in range(41):
        eps = 1e-2 * 2.0 ** (-k)
        p = q + eps
        if p >= 1.0:
            continue
        f = 2.0 * r * (p - q) ** 2 * abs_log_q - _binary_rel_ent(p, q)
        if f < 0.0:
            return p, q, -f
    raise RuntimeError(
        f"no violation found for r={r!r} down to eps=1e-2*2^-40; "
        "the scan should always succeed"
    )


def _xlogx(v: np.ndarray) -> np.ndarray:
    out = np.zeros_like(v)
    pos = v > 0.0
    out[pos] = v[pos] * np.log(v[pos])
    return out


def _rel_ent_2x2_diag_plus(
    m00: float, m11: float, eta: float, t: float, alpha: np.ndarray
) -> np.ndarray:
    """Vectorized S(sigma + diag(t, -t) || sigma) for sigma = M + eta P(alpha).

    M = diag(m00, m11) and P(alpha) projects onto (cos a, sin a); everything
    is real symmetric 2x2, so eigensystems are closed-form.
    """
    ca = np.cos(alpha)
    sa = np.sin(alpha)
    s00 = m00 + eta * ca * ca
    s11 = m11 + eta * sa * sa
    s01 = eta * ca * sa
    r00 = s00 + t
    r11 = s11 - t
    r01 = s01

    half = 0.5 * (r00 - r11)
    rad = np.hypot(half, r01)
    tm = 0.5 * (r00 + r11)
    lam_p = np.maximum(tm + rad, 0.0)
    lam_m = np.maximum(tm - rad, 0.0)
    term1 = _xlogx(lam_p) + _xlogx(lam_m)

    shalf = 0.5 * (s00 - s11)
    srad = np.hypot(shalf, s01)
    sm = 0.5 * (s00 + s11)
    mu_p = sm + srad
    mu_m = sm - srad

    # eigenvector of mu_p: the better-conditioned of two candidates
    a1, b1 = s01, mu_p - s00
    a2, b2 = mu_p - s11, s01
    n1 = a1 * a1 + b1 * b1
    n2 = a2 * a2 + b2 * b2
    use2 = n2 > n1
    a = np.where(use2, a2, a1)
    b = np.where(use2, b2, b1)
    n = np.where(use2, n2, n1)
    degenerate = n == 0.0
    a = np.where(degenerate, 1.0, a)
    b = np.where(degenerate, 0.0, b)
    n = np.where(degenerate, 1.0, n)

    w_p = (a * a * r00 + 2.0 * a * b * r01 + b * b * r11) / n
    w_m = (r00 + r11) - w_p
    term2 = w_p * np.log(mu_p) + w_m * np.log(mu_m)
    return term1 - term2


def extremal_psi_check_d2(T: float, beta: float, grid: int = 10_000) -> dict:
    """Grid check of the rank-one completion family in dimension two.

    Sweeps sigma = M + eta |psi><psi| with psi = (cos a, sin a) over
    a in [0, pi/2], M pinning the elementwise eigenvalue floor, and
    evaluates S(sigma + Delta || sigma) on the grid. Records whether the
    maximum sits at an endpoint (within 1e-12) and whether the endpoint
    value matches upper_bound_sharp_d2 to 1e-9. For T > beta this family
    does not exhaust the feasible pairs: the sharp bound can strictly
    exceed both endpoints, in which case matches_bound is False while
    endpoint_is_max still holds. Requires 0 < beta <= 1/2,
    0 <= T <= 1 - beta, grid >= 2.
    """
    T = float(T)
    beta = float(beta)
    if not 0.0 < beta <= 0.5:
        raise ValueError(f"beta must lie in (0, 1/2]: got {beta!r}")
    if not 0.0 <= T <= 1.0 - beta:
        raise ValueError(f"T must lie in [0, 1 - beta] = [0, {1.0 - beta!r}]: got {T!r}")
    if grid < 2:
        raise ValueError(f"grid must be >= 2: got {grid}")

    if T <= beta:
        m00, m11 = beta, beta
        branch = "T<=beta"
    else:
        m00, m11 = beta, T
        branch = "T>beta"
    eta = 1.0 - m00 - m11

    alpha = np.linspace(0.0, 0.5 * math.pi, grid)
    vals = _rel_ent_2x2_diag_plus(m00, m11, eta, T, alpha)

    idx = int(np.argmax(vals))
    value_star = float(vals[idx])
    endpoint_value = float(max(vals[0], vals[-1]))
    interior_excess = value_star - endpoint_value
    bound = upper_bound_sharp_d2(T, beta)
    return {
        "T": T,
        "beta": beta,
        "grid": int(grid),
        "branch": branch,
        "alpha_star": float(alpha[idx]),
        "value_star": value_star,
        "endpoint_value": endpoint_value,
        "interior_excess": interior_excess,
        "endpoint_is_max": interior_excess <= 1e-12,
        "bound": bound,
        "matches_bound": abs(endpoint_value - bound) <= 1e-9,
        "winning_endpoint": "(1,0)" if vals[0] >= vals[-1] else "(0,1)",
    }


def second_derivative_check(sigma: DensityMatrix, delta) -> dict:
    """Finite-difference second derivative of S(sigma + eps Delta || sigma).

    Compares the central second difference at eps = 1e-4 with the closed
    quadratic form in the eigenbasis of sigma. The finite difference never
    exceeds the form beyond fourth-order truncation error; at sigma = I/d
    the two agree. eps is halved (up to 30 times) while sigma +/- eps Delta
    leaves the state space; persistent infeasibility is an error.
    """
    if sigma.min_eigenvalue <= 0.0:
        raise ValueError(
            f"sigma must be positive definite: min eigenvalue {sigma.min_eigenvalue:.3e}"
        )
    delta = as_state_delta(delta)
    if delta.shape[0] != sigma.dim:
        raise ValueError(f"dimension mismatch: {delta.shape[0]} vs {sigma.dim}")

    eps = 1e-4
    for _ in range(31):
        w_plus = eig_hermitian(sigma.mat + eps * delta).eigenvalues
        w_minus = eig_hermitian(sigma.mat - eps * delta).eigenvalues
        if float(w_plus[-1]) >= -1e-12 and float(w_minus[-1]) >= -1e-12:
            break
        eps *= 0.5
    else:
        raise ValueError(
            "sigma +/- eps Delta stays outside the state space even at "
            f"eps={eps!r}; Delta is too large for this sigma"
        )

    s_plus = relative_entropy(sigma.mat + eps * delta, sigma)
    s_minus = relative_entropy(sigma.mat - eps * delta, sigma)
    fd = (s_plus + s_minus) / (eps * eps)
    form = quadratic_log_form(sigma, delta)
    d = sigma.dim
    is_mm = bool(
        np.max(np.abs(sigma.mat - np.eye(d, dtype=np.complex128) / d)) <= 1e-12
    )
    return {
        "epsilon": eps,
        "fd": fd,
        "form": form,
        "excess": fd - form,
        "fd_le_form": fd <= form + 1e-6,
        "is_maximally_mixed": is_mm,
        "equal_within_tol": abs(fd - form) <= 1e-6,
    }
