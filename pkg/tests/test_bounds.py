"""Lower/upper bound functions: frozen oracles, domains, sharpness witnesses."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relbound.bounds import (
    CSV_HEADER,
    approx_convergence_rate,
    bound_report,
    fannes_bound,
    fannes_correction,
    lower_bound_pinsker,
    lower_bound_sharp,
    s_of_x,
    smin_curve,
    upper_bound_brat,
    upper_bound_log,
    upper_bound_minus_log_beta,
    upper_bound_quadratic,
    upper_bound_sharp_d2,
    upper_bound_sharp_dgt2,
)
from relbound.entropy import relative_entropy, von_neumann_entropy
from relbound.norms import TRACE, ky_fan, trace_distance_half
from relbound.states import DensityMatrix, pure_state, random_density

# independently derived minima (ternary search at 50-digit precision),
# not outputs of the library kernel
S_ORACLE = {
    0.01: 2.0000444468149811e-04,
    0.05: 5.0027814879907091e-03,
    0.1: 2.0044683157952950e-02,
    0.2: 8.0726721359173223e-02,
}


def _two_level(p):
    return DensityMatrix(np.diag([p, 1.0 - p]).astype(complex))


HALF = DensityMatrix(np.eye(2, dtype=complex) / 2.0)


# --- s(x) -------------------------------------------------------------------

def test_s_domain():
    with pytest.raises(ValueError):
        s_of_x(-0.1)
    with pytest.raises(ValueError):
        s_of_x(1.0)
    assert s_of_x(0.0) == 0.0


def test_s_frozen_oracles():
    for x, want in S_ORACLE.items():
        assert s_of_x(x) == pytest.approx(want, abs=1e-12)


def test_s_series_agreement():
    for x in (0.01, 0.05, 0.1, 0.2):
        series = 2.0 * x**2 + (4.0 / 9.0) * x**4 + (32.0 / 135.0) * x**6
        assert abs(s_of_x(x) - series) <= 10.0 * x**8


def test_s_envelope():
    for x in np.linspace(0.01, 0.99, 99):
        s = s_of_x(float(x))
        assert s >= 2.0 * x * x
        assert s <= -math.log1p(-float(x))


def test_s_strictly_interior_then_boundary():
    # the gap to -log(1-x) shrinks like exp(-x/(1-x)); for moderate x the
    # minimum is genuinely interior, at x = 0.995 the gap is below one ulp
    # and s evaluates to the endpoint value exactly
    for x in (0.1, 0.3, 0.5, 0.7, 0.9, 0.95):
        assert s_of_x(x) < -math.log1p(-x)
    assert s_of_x(0.995) == -math.log1p(-0.995)


def test_s_monotone_nondecreasing():
    xs = np.linspace(0.0, 0.99, 200)
    vals = [s_of_x(float(x)) for x in xs]
    assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_smin_curve_structure():
    curve = smin_curve([0.0, 0.1, 0.2])
    assert curve.grid[0] == (0.0, 0.0)
    assert [x for x, _ in curve.grid] == [0.0, 0.1, 0.2]
    svals = [s for _, s in curve.grid]
    assert svals == sorted(svals)
    assert curve.conventions["log"] == "natural"


# --- simple lower/upper bounds ---------------------------------------------

def test_lower_bound_sharp_example():
    rho = _two_level(0.6)
    lb = lower_bound_sharp(rho, HALF, TRACE)
    assert lb == pytest.approx(S_ORACLE[0.1], abs=1e-12)
    assert lb <= relative_entropy(rho, HALF)


def test_lower_bound_sharp_orthogonal_is_finite():
    lb = lower_bound_sharp(pure_state([1.0, 0.0]), pure_state([0.0, 1.0]), TRACE)
    assert math.isfinite(lb)
    assert lb > 10.0  # s(1 - 1e-9) is large but never +inf


def test_pinsker_example():
    assert lower_bound_pinsker(_two_level(0.6), HALF) == pytest.approx(0.02, abs=1e-14)


def test_brat_example_and_singular():
    assert upper_bound_brat(_two_level(0.6), HALF) == pytest.approx(0.2, abs=1e-13)
    with pytest.raises(ValueError, match="positive definite"):
        upper_bound_brat(HALF, pure_state([1.0, 0.0]))


def test_minus_log_beta():
    for d in (2, 3, 4):
        sigma = DensityMatrix(np.eye(d, dtype=complex) / d)
        assert upper_bound_minus_log_beta(sigma) == pytest.approx(
            math.log(d), abs=1e-13
        )
    with pytest.raises(ValueError, match="positive definite"):
        upper_bound_minus_log_beta(pure_state([1.0, 0.0]))


def test_quadratic_example():
    assert upper_bound_quadratic(_two_level(0.6), HALF) == pytest.approx(
        0.04, abs=1e-14
    )


def test_upper_log_zero_at_zero_distance():
    assert upper_bound_log(HALF, HALF) == pytest.approx(0.0, abs=1e-14)


def test_upper_log_frozen():
    rho = DensityMatrix(np.diag([0.35, 0.2, 0.45]).astype(complex))
    sigma = DensityMatrix(np.diag([0.1, 0.45, 0.45]).astype(complex))
    # T_full = 0.5, so the value is 0.5 log 3 + 1/e - 0.25 log 0.1
    want = 0.5 * math.log(3.0) + 1.0 / math.e - 0.25 * math.log(0.1)
    assert upper_bound_log(rho, sigma) == pytest.approx(want, abs=1e-12)
    assert upper_bound_log(rho, sigma) == pytest.approx(
        1.4928318587540086, abs=1e-12
    )


# --- Fannes-type pieces ------------------------------------------------------

def test_fannes_correction_piecewise():
    inv_e = 1.0 / math.e
    assert fannes_correction(0.0) == 0.0
    assert fannes_correction(-1.0) == 0.0
    assert fannes_correction(0.1) == pytest.approx(-0.1 * math.log(0.1), abs=1e-15)
    assert fannes_correction(inv_e) == pytest.approx(inv_e, abs=1e-15)
    assert fannes_correction(0.5) == inv_e
    assert fannes_correction(2.0) == inv_e  # constant branch, never negative


def test_fannes_bound_frozen():
    # T_full = 0.2: 0.2 log 2 + 0.2 log 5 = 0.2 log 10
    got = fannes_bound(_two_level(0.6), HALF)
    assert got == pytest.approx(0.2 * math.log(10.0), abs=1e-13)
    assert got == pytest.approx(0.46051701859880906, abs=1e-13)
    with pytest.raises(ValueError, match="dimension mismatch"):
        fannes_bound(HALF, DensityMatrix(np.eye(3, dtype=complex) / 3.0))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), d=st.sampled_from([2, 3, 4]))
def test_fannes_bounds_entropy_difference(seed, d):
    rho = random_density(d, seed=seed)
    sigma = random_density(d, seed=seed + 1)
    gap = abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma))
    assert gap <= fannes_bound(rho, sigma) + 1e-9


# --- sharp two-dimensional bound ---------------------------------------------

def test_d2_domain():
    for bad in (-0.1, 0.51):
        with pytest.raises(ValueError, match="beta"):
            upper_bound_sharp_d2(0.1, bad)
    with pytest.raises(ValueError, match="T must lie"):
        upper_bound_sharp_d2(-0.01, 0.3)
    with pytest.raises(ValueError, match="T must lie"):
        upper_bound_sharp_d2(0.71, 0.3)
    assert upper_bound_sharp_d2(0.0, 0.3) == 0.0
    assert upper_bound_sharp_d2(0.0, 0.0) == 0.0
    assert upper_bound_sharp_d2(0.5, 0.0) == math.inf


def test_d2_low_branch_frozen():
    assert upper_bound_sharp_d2(0.2, 0.3) == pytest.approx(
        0.1163217565860044, abs=1e-14
    )


def test_d2_branch_continuity():
    for beta in (0.1, 0.25, 0.4):
        at = upper_bound_sharp_d2(beta, beta)
        assert at == pytest.approx(-math.log1p(-beta), abs=1e-13)
        below = upper_bound_sharp_d2(beta - 1e-9, beta)
        above = upper_bound_sharp_d2(beta + 1e-9, beta)
        assert below == pytest.approx(at, abs=1e-7)
        assert above == pytest.approx(at, abs=1e-7)


def test_d2_monotone_in_T():
    for beta in (0.1, 0.3, 0.5):
        ts = np.linspace(0.0, 1.0 - beta, 200)
        vals = [upper_bound_sharp_d2(float(t), beta) for t in ts]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))


def _corner_pair(T, beta):
    """Two-level pair at distance T with min eig of sigma equal to beta.

    sigma is rotated so that adding T*diag(1,-1) keeps rho a state while
    pinning lambda_min(sigma) = beta; attains the corner expression of the
    T > beta branch.
    """
    a = (1.0 - T + beta * (1.0 - beta) / T) / 2.0
    z = math.sqrt(max(0.25 - (a - 0.5 + T) ** 2, 0.0))
    sigma = np.array([[a, z], [z, 1.0 - a]], dtype=complex)
    rho = sigma + T * np.diag([1.0, -1.0]).astype(complex)
    return DensityMatrix(rho), DensityMatrix(sigma)


def test_d2_high_branch_attained_by_corner_pair():
    for T, beta in ((0.6786393705725056, 0.23297604143687664),
                    (0.5, 0.2), (0.3, 0.1), (0.62, 0.3)):
        rho, sigma = _corner_pair(T, beta)
        assert sigma.min_eigenvalue == pytest.approx(beta, abs=1e-12)
        assert trace_distance_half(rho, sigma) == pytest.approx(T, abs=1e-12)
        bound = upper_bound_sharp_d2(T, beta)
        assert relative_entropy(rho, sigma) == pytest.approx(bound, abs=1e-12)


def test_d2_high_branch_diagonal_pair_never_exceeds():
    for T, beta in ((0.3, 0.2), (0.5, 0.1), (0.45, 0.25)):
        rho = DensityMatrix(np.diag([1.0 - beta - T, beta + T]).astype(complex))
        sigma = DensityMatrix(np.diag([1.0 - beta, beta]).astype(complex))
        got = relative_entropy(rho, sigma)
        diag = (beta + T) * math.log((beta + T) / beta) + (
            1.0 - beta - T
        ) * math.log((1.0 - beta - T) / (1.0 - beta))
        assert got == pytest.approx(diag, abs=1e-12)
        assert got <= upper_bound_sharp_d2(T, beta) + 1e-12


# --- sharp bound for d > 2 ----------------------------------------------------

def test_dgt2_domain():
    with pytest.raises(ValueError, match="beta"):
        upper_bound_sharp_dgt2(0.1, -0.01)
    with pytest.raises(ValueError, match="T must lie"):
        upper_bound_sharp_dgt2(0.95, 0.1)
    assert upper_bound_sharp_dgt2(0.0, 0.3) == 0.0
    assert upper_bound_sharp_dgt2(0.5, 0.0) == math.inf


def test_dgt2_frozen():
    assert upper_bound_sharp_dgt2(0.5, 0.1) == pytest.approx(
        0.6 * math.log(6.0), abs=1e-14
    )
    assert upper_bound_sharp_dgt2(0.5, 0.1) == pytest.approx(
        1.0750556815368328, abs=1e-14
    )


def test_dgt2_branch_continuity():
    for beta in (0.1, 0.3):
        at = upper_bound_sharp_dgt2(beta, beta)
        assert at == pytest.approx(2.0 * beta * math.log(2.0), abs=1e-13)
        assert upper_bound_sharp_dgt2(beta - 1e-9, beta) == pytest.approx(at, abs=1e-7)
        assert upper_bound_sharp_dgt2(beta + 1e-9, beta) == pytest.approx(at, abs=1e-7)


def test_dgt2_monotone_and_dominates_d2():
    for beta in (0.05, 0.15, 0.3, 0.45):
        ts = np.linspace(0.0, 1.0 - beta, 150)
        vals = [upper_bound_sharp_dgt2(float(t), beta) for t in ts]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))
        if beta <= 0.5:
            for t, v in zip(ts, vals):
                assert upper_bound_sharp_d2(float(t), beta) <= v + 1e-12


# --- aggregate report ---------------------------------------------------------

def test_bound_report_two_level():
    rep = bound_report(_two_level(0.6), HALF)
    assert rep.dim == 2
    assert rep.beta == pytest.approx(0.5, abs=1e-14)
    assert rep.T_trace_half == pytest.approx(0.1, abs=1e-14)
    assert rep.T_trace_full == pytest.approx(0.2, abs=1e-14)
    assert rep.T_schatten2 == pytest.approx(math.sqrt(0.02), abs=1e-14)
    assert rep.T_operator == pytest.approx(0.1, abs=1e-14)
    assert rep.exact_S == pytest.approx(0.020135513550688766, abs=1e-13)
    assert rep.lower_s == pytest.approx(S_ORACLE[0.1], abs=1e-12)
    assert rep.lower_pinsker == pytest.approx(0.02, abs=1e-14)
    assert rep.upper_brat == pytest.approx(0.2, abs=1e-13)
    assert rep.upper_minus_log_beta == pytest.approx(math.log(2.0), abs=1e-14)
    assert rep.upper_quad == pytest.approx(0.04, abs=1e-13)
    assert rep.upper_sharp == pytest.approx(
        upper_bound_sharp_d2(0.1, 0.5), abs=1e-13
    )
    assert rep.approx_small_T == pytest.approx(0.02, abs=1e-14)
    assert rep.sharpness == "sharp"
    # the sandwich holds on this pair
    assert rep.lower_s <= rep.exact_S <= rep.upper_sharp + 1e-12
    assert rep.lower_pinsker <= rep.exact_S
    for up in (rep.upper_brat, rep.upper_minus_log_beta, rep.upper_quad, rep.upper_log):
        assert rep.exact_S <= up + 1e-12


def test_bound_report_singular_sigma():
    rep = bound_report(HALF, pure_state([1.0, 0.0]))
    assert rep.exact_S == math.inf
    for up in (rep.upper_brat, rep.upper_minus_log_beta, rep.upper_quad,
               rep.upper_log, rep.upper_sharp):
        assert up == math.inf
    assert math.isfinite(rep.lower_s)
    d = rep.to_json_dict()
    assert d["exact_S"] == "+inf"
    assert d["upper_sharp"] == "+inf"
    assert "+inf" in rep.csv_row()


def test_bound_report_csv_shape():
    rep = bound_report(_two_level(0.6), HALF)
    cells = rep.csv_row().split(",")
    assert len(cells) == len(CSV_HEADER.split(","))
    assert float(cells[2]) == pytest.approx(rep.T_trace_half, rel=1e-14)
    assert float(cells[6]) == pytest.approx(rep.exact_S, rel=1e-14)


def test_bound_report_extra_kinds():
    rep = bound_report(_two_level(0.6), HALF, extra_kinds=(ky_fan(1),))
    assert len(rep.extra_norms) == 1
    entry = rep.extra_norms[0]
    assert entry["kind"] == "kyfan:1"
    assert entry["T"] == pytest.approx(0.1, abs=1e-13)
    assert entry["lower_s"] <= rep.exact_S
    assert "extra_norms" in rep.to_json_dict()
    assert "extra_norms" not in bound_report(_two_level(0.6), HALF).to_json_dict()


def test_bound_report_sharpness_label_dgt2():
    sigma = DensityMatrix(np.eye(3, dtype=complex) / 3.0)
    rep = bound_report(pure_state([1.0, 0.0, 0.0]), sigma)
    assert rep.T_trace_half > 1.0 - 2.0 * rep.beta
    assert rep.sharpness == "valid upper bound, sharpness unproven"
    with pytest.raises(ValueError, match="dimension mismatch"):
        bound_report(HALF, sigma)


# --- approximation-rate tracker -----------------------------------------------

def test_rate_converging_sequence():
    ns = np.arange(2, 9)
    out = approx_convergence_rate(1.0 / ns**2, 1.0 / ns)
    assert out["verdict"] == "converges"
    assert out["tail_nonincreasing"]
    assert all(b is not None for b in out["s_upper_bounds"])
    assert out["products"][0] == pytest.approx(math.log(2.0) / 4.0, abs=1e-14)


def test_rate_diverging_sequence():
    ns = np.arange(2, 9)
    out = approx_convergence_rate(1.0 / ns, np.exp(-(ns**2.0)))
    assert out["verdict"] == "diverges"


def test_rate_bound_out_of_range_is_none():
    out = approx_convergence_rate([0.9], [0.5])
    assert out["s_upper_bounds"] == [None]


def test_rate_validation():
    with pytest.raises(ValueError, match="nonempty"):
        approx_convergence_rate([], [])
    with pytest.raises(ValueError, match="equal length"):
        approx_convergence_rate([0.1], [0.1, 0.2])
    with pytest.raises(ValueError, match="T values"):
        approx_convergence_rate([1.5], [0.5])
    with pytest.raises(ValueError, match="beta values"):
        approx_convergence_rate([0.5], [0.0])
