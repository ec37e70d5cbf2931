"""Pure-Python kernels: cyclic Jacobi eigensolver and the s(x) minimizer.

This module is the reference implementation; relbound._kernels is a compiled
twin with the same algorithms and the same operation order, so both backends
produce matching results. Keep the two in sync.
"""
from __future__ import annotations

import math

import numpy as np

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def _offdiag_norm(a: np.ndarray, d: int) -> float:
    s = 0.0
    for p in range(d - 1):
        for q in range(p + 1, d):
            x = a[p, q]
            s += 2.0 * (x.real * x.real + x.imag * x.imag)
    return math.sqrt(s)


def jacobi_eigh(a: np.ndarray):
    """Diagonalize a Hermitian matrix in place by cyclic complex Jacobi rotations.

    `a` is destroyed. Returns (w, V, off, sweeps) with unsorted eigenvalues w,
    accumulated rotations V (columns are eigenvectors), the final off-diagonal
    Frobenius norm, and the number of sweeps used. Convergence is declared when
    off < JACOBI_TOL * ||A||_F; the caller is responsible for raising if the
    sweep cap was hit first.
    """
    d = a.shape[0]
    v = np.eye(d, dtype=np.complex128)
    if d == 1:
        return np.array([a[0, 0].real]), v, 0.0, 0

    norm_f = 0.0
    for p in range(d):
        for q in range(d):
            x = a[p, q]
            norm_f += x.real * x.real + x.imag * x.imag
    norm_f = math.sqrt(norm_f)
    threshold = JACOBI_TOL * norm_f

    off = _offdiag_norm(a, d)
    sweeps = 0
    while off > threshold and sweeps < JACOBI_MAX_SWEEPS:
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p, q]
                m = math.hypot(apq.real, apq.imag)
                if m == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                u = complex(apq.real / m, apq.imag / m)
                tau = (aqq - app) / (2.0 * m)
                if tau >= 0.0:
                    t = -1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                ub = u.conjugate()
                # rows/columns outside the (p, q) block
                for i in range(d):
                    if i == p or i == q:
                        continue
                    aip = a[i, p]
                    aiq = a[i, q]
                    nip = c * aip + s * ub * aiq
                    niq = -s * u * aip + c * aiq
                    a[i, p] = nip
                    a[p, i] = nip.conjugate()
                    a[i, q] = niq
                    a[q, i] = niq.conjugate()
                a[p, p] = c * c * app + 2.0 * c * s * m + s * s * aqq
                a[q, q] = s * s * app - 2.0 * c * s * m + c * c * aqq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(d):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip + s * ub * viq
                    v[i, q] = -s * u * vip + c * viq
        sweeps += 1
        off = _offdiag_norm(a, d)

    w = np.empty(d)
    for i in range(d):
        w[i] = a[i, i].real
    return w, v, off, sweeps


def smin_objective(r: float, x: float) -> float:
    """Binary relative entropy S((r+x, 1-r-x) || (r, 1-r))."""
    a = r + x
    b = 1.0 - r - x
    return a * math.log(a / r) + b * math.log(b / (1.0 - r))


def smin_golden(x: float, xatol: float = 1e-12):
    """Minimum of smin_objective over r in (0, 1-x].

    Returns (value, argmin). Golden-section search on the bracket
    [1e-15, 1-x-1e-15], plus the closed right endpoint r = 1-x where the
    objective equals -log(1-x) under the 0 log 0 = 0 convention. For x near 1
    the minimizer hides in a boundary layer of width ~ exp(-x/(1-x)) that no
    bracketed probe can resolve, so without the endpoint candidate the search
    would overshoot the true minimum there.
    """
    end = -math.log1p(-x)
    lo = 1e-15
    hi = 1.0 - x - 1e-15
    h = hi - lo
    if h <= xatol:
        r = 0.5 * (lo + hi)
        fr = smin_objective(r, x)
        if end < fr:
            return end, 1.0 - x
        return fr, r
    c = lo + _INVPHI2 * h
    d = lo + _INVPHI * h
    fc = smin_objective(c, x)
    fd = smin_objective(d, x)
    while h > xatol:
        if fc < fd:
            hi = d
            d = c
            fd = fc
            h = hi - lo
            c = lo + _INVPHI2 * h
            fc = smin_objective(c, x)
        else:
            lo = c
            c = d
            fc = fd
            h = hi - lo
            d = lo + _INVPHI * h
            fd = smin_objective(d, x)
    r = 0.5 * (lo + hi)
    fr = smin_objective(r, x)
    if end < fr:
        return end, 1.0 - x
    return fr, r
