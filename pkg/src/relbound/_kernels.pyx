# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: cyclic Jacobi eigensolver and the s(x) minimizer.

Twin of relbound._kernels_py. The algorithms and the order of floating-point
operations are kept in sync so the two backends produce matching results.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport hypot, log, log1p, sqrt

cnp.import_array()

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

cdef double _TOL = 1e-13
cdef int _MAX_SWEEPS = 100
cdef double _INVPHI = (sqrt(5.0) - 1.0) / 2.0
cdef double _INVPHI2 = (3.0 - sqrt(5.0)) / 2.0


cdef double _offdiag_norm(double complex[:, ::1] a, Py_ssize_t d) noexcept nogil:
    cdef double s = 0.0
    cdef Py_ssize_t p, q
    cdef double complex x
    for p in range(d - 1):
        for q in range(p + 1, d):
            x = a[p, q]
            s += 2.0 * (x.real * x.real + x.imag * x.imag)
    return sqrt(s)


def jacobi_eigh(a_arr):
    """Diagonalize a Hermitian matrix in place by cyclic complex Jacobi rotations.

    `a_arr` (complex128, C-contiguous) is destroyed. Returns (w, V, off, sweeps);
    see the pure-Python twin for the contract.
    """
    cdef cnp.ndarray a_nd = np.ascontiguousarray(a_arr, dtype=np.complex128)
    cdef Py_ssize_t d = a_nd.shape[0]
    cdef cnp.ndarray v_nd = np.eye(d, dtype=np.complex128)
    cdef double complex[:, ::1] a = a_nd
    cdef double complex[:, ::1] v = v_nd
    cdef cnp.ndarray w_nd = np.empty(d, dtype=np.float64)
    cdef double[::1] w = w_nd

    if d == 1:
        w[0] = a[0, 0].real
        return w_nd, v_nd, 0.0, 0

    cdef double norm_f = 0.0
    cdef Py_ssize_t p, q, i
    cdef double complex x, apq, u, ub, aip, aiq, nip, niq, vip, viq
    cdef double m, app, aqq, tau, t, c, s, off
    cdef int sweeps = 0

    for p in range(d):
        for q in range(d):
            x = a[p, q]
            norm_f += x.real * x.real + x.imag * x.imag
    norm_f = sqrt(norm_f)
    cdef double threshold = _TOL * norm_f

    off = _offdiag_norm(a, d)
    while off > threshold and sweeps < _MAX_SWEEPS:
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p, q]
                m = hypot(apq.real, apq.imag)
                if m == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                u.real = apq.real / m
                u.imag = apq.imag / m
                tau = (aqq - app) / (2.0 * m)
                if tau >= 0.0:
                    t = -1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                ub = u.conjugate()
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

    for i in range(d):
        w[i] = a[i, i].real
    return w_nd, v_nd, off, sweeps


cdef double _objective(double r, double x) noexcept nogil:
    cdef double a = r + x
    cdef double b = 1.0 - r - x
    return a * log(a / r) + b * log(b / (1.0 - r))


def smin_objective(double r, double x):
    """Binary relative entropy S((r+x, 1-r-x) || (r, 1-r))."""
    return _objective(r, x)


def smin_golden(double x, double xatol=1e-12):
    """Minimum of smin_objective over r in (0, 1-x].

    Returns (value, argmin); twin of the pure-Python implementation. The
    closed right endpoint r = 1-x, where the objective equals -log(1-x), is
    included as a candidate alongside the golden-section bracket.
    """
    cdef double end = -log1p(-x)
    cdef double lo = 1e-15
    cdef double hi = 1.0 - x - 1e-15
    cdef double h = hi - lo
    cdef double c, d, fc, fd, r, fr
    if h <= xatol:
        r = 0.5 * (lo + hi)
        fr = _objective(r, x)
        if end < fr:
            return end, 1.0 - x
        return fr, r
    c = lo + _INVPHI2 * h
    d = lo + _INVPHI * h
    fc = _objective(c, x)
    fd = _objective(d, x)
    while h > xatol:
        if fc < fd:
            hi = d
            d = c
            fd = fc
            h = hi - lo
            c = lo + _INVPHI2 * h
            fc = _objective(c, x)
        else:
            lo = c
            c = d
            fc = fd
            h = hi - lo
            d = lo + _INVPHI * h
            fd = _objective(d, x)
    r = 0.5 * (lo + hi)
    fr = _objective(r, x)
    if end < fr:
        return end, 1.0 - x
    return fr, r
