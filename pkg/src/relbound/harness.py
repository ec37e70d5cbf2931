"""Seeded randomized verification suite over every library invariant.

Each property draws its own deterministic random stream from
(seed, property index, dimension), evaluates a margin per sampled case, and
records the worst case. A margin is residual minus tolerance: inequalities
use the configured slack, equality/saturation checks use slack/1000, and
finite-difference comparisons use slack*1000 (1e-6 at the default slack of
1e-9). A case violates its property when its margin is positive. Violations
are data, not errors; the worst violating case is serialized so that
replay() reproduces its margin bit for bit.

Finite-difference properties sample better-conditioned states (eigenvalue
floors around 0.02) than the bound-sandwich properties (floor 1e-6), since
truncation error grows with the inverse cube of the smallest eigenvalue.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import bounds as _bounds
from ._backend import BACKEND
from .bounds import (
    bound_report,
    fannes_bound,
    lower_bound_pinsker,
    s_of_x,
    upper_bound_sharp_dgt2,
)
from .entropy import (
    fidelity,
    relative_entropy,
    relative_entropy_gradient,
    von_neumann_entropy,
)
from .norms import (
    OPERATOR,
    TRACE,
    NormKind,
    norm,
    norm_from_singular_values,
    norm_of_reference,
    singular_values,
)
from .states import (
    DensityMatrix,
    matrix_from_json,
    matrix_to_json,
    special_E,
)
from .witnesses import (
    second_derivative_check,
    witness_lower,
    witness_upper_T_gt_beta,
    witness_upper_T_le_beta,
)

__all__ = [
    "DEFAULT_NORM_KINDS",
    "SuiteConfig",
    "PropertyResult",
    "SuiteReport",
    "run_suite",
    "replay",
    "PROPERTY_NAMES",
]

DEFAULT_NORM_KINDS = (
    "trace",
    "operator",
    "schatten:1.5",
    "schatten:2",
    "schatten:3",
    "kyfan:1",
    "kyfan:2",
    "kyfan:3",
    "kyfan:4",
    "kyfan:5",
)


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 42
    samples_per_case: int = 10_000
    dims: tuple = (2, 3, 4, 5)
    slack: float = 1e-9
    norm_kinds: tuple = DEFAULT_NORM_KINDS

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "norm_kinds", tuple(str(k) for k in self.norm_kinds))
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0: got {self.seed}")
        if self.samples_per_case < 1:
            raise ValueError(f"samples_per_case must be >= 1: got {self.samples_per_case}")
        if self.slack < 0.0:
            raise ValueError(f"slack must be >= 0: got {self.slack!r}")
        if not self.dims or any(d < 2 for d in self.dims):
            raise ValueError(f"dims must be a nonempty sequence of integers >= 2: {self.dims}")
        for k in self.norm_kinds:
            NormKind.parse(k)

    def kinds_for(self, dim: int) -> list:
        """Configured norm kinds applicable in this dimension."""
        out = []
        for text in self.norm_kinds:
            kind = NormKind.parse(text)
            if kind.family == "kyfan" and kind.k > dim:
                continue
            out.append(kind)
        return out


@dataclass(frozen=True)
class PropertyResult:
    name: str
    samples: int
    violations: int
    worst_margin: float
    witness_input: dict | None = None

    def to_json_dict(self) -> dict:
        worst = self.worst_margin
        if isinstance(worst, float) and math.isinf(worst):
            worst = "-inf" if worst < 0 else "+inf"
        return {
            "name": self.name,
            "samples": self.samples,
            "violations": self.violations,
            "worst_margin": worst,
            "witness_input": self.witness_input,
        }


@dataclass(frozen=True)
class SuiteReport:
    config: SuiteConfig
    properties: tuple
    verdict: str

    @property
    def total_violations(self) -> int:
        return sum(p.violations for p in self.properties)

    def to_json_dict(self) -> dict:
        return {
            "backend": BACKEND,
            "config": {
                "seed": self.config.seed,
                "samples_per_case": self.config.samples_per_case,
                "dims": list(self.config.dims),
                "slack": self.config.slack,
                "norm_kinds": list(self.config.norm_kinds),
            },
            "properties": [p.to_json_dict() for p in self.properties],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# case serialization (replay format)

def _ser(value):
    if isinstance(value, np.ndarray):
        return {"__matrix__": matrix_to_json(value)}
    if isinstance(value, (list, tuple)):
        return [_ser(v) for v in value]
    if isinstance(value, dict):
        return {k: _ser(v) for k, v in value.items()}
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return value


def _deser(value):
    if isinstance(value, dict):
        if "__matrix__" in value:
            return matrix_from_json(value["__matrix__"])
        return {k: _deser(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_deser(v) for v in value]
    return value


# ---------------------------------------------------------------------------
# sampling helpers (raw arrays; validation happens in the evaluators)

def _rand_herm(rng, d: int) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (g + g.conj().T) / 2.0


def _rand_traceless(rng, d: int) -> np.ndarray:
    h = _rand_herm(rng, d)
    return h - (np.trace(h).real / d) * np.eye(d, dtype=np.complex128)


def _rand_state_raw(rng, d: int) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    return m / float(np.trace(m).real)


def _rand_state_floor_raw(rng, d: int, floor: float) -> np.ndarray:
    m = _rand_state_raw(rng, d)
    return floor * np.eye(d, dtype=np.complex128) + (1.0 - d * floor) * m


def _rand_unitary(rng, d: int) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def _basis_state(d: int, i: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=np.complex128)
    m[i, i] = 1.0
    return m


# ---------------------------------------------------------------------------
# evaluators: case dict -> margin (shared between run_suite and replay)

def _eval_norm_axioms(case, slack):
    kind = NormKind.parse(case["kind"])
    a, b, u = case["a"], case["b"], case["u"]
    c = case["c"]
    na = norm(a, kind)
    nb = norm(b, kind)
    tri = norm(a + b, kind) - na - nb
    hom = abs(norm(c * a, kind) - abs(c) * na)
    rotated = u @ a @ u.conj().T
    uni = abs(norm((rotated + rotated.conj().T) / 2.0, kind) - na)
    return max(tri - slack, hom - slack / 1000.0, uni - slack)


def _eval_norm_envelope(case, slack):
    kind = NormKind.parse(case["kind"])
    a = case["a"]
    d = a.shape[0]
    ratio = norm(a, kind) / norm(special_E(d), kind)
    return max(norm(a, OPERATOR) - ratio, ratio - norm(a, TRACE)) - slack


def _eval_rescaled_envelope(case, slack):
    # Rescaled norms of a traceless input are capped by the rescaled trace
    # norm for every kind, and floored by the rescaled operator norm only
    # for kinds whose gauge is supported on one extreme of the spectrum
    # (trace, operator, top-k Ky Fan with k in {1, d}); intermediate Ky Fan
    # and Schatten q > 1 kinds can dip below it, but never below half.
    kind = NormKind.parse(case["kind"])
    a = case["a"]
    d = a.shape[0]
    sv = singular_values(a)
    lo = norm_from_singular_values(sv, OPERATOR) / norm_of_reference(OPERATOR, d)
    mid = norm_from_singular_values(sv, kind) / norm_of_reference(kind, d)
    hi = norm_from_singular_values(sv, TRACE) / norm_of_reference(TRACE, d)
    full_floor = (
        d == 2
        or kind.family in ("trace", "operator")
        or (kind.family == "kyfan" and kind.k in (1, d))
    )
    floor_gap = (lo - mid) if full_floor else (0.5 * lo - mid)
    return max(floor_gap, mid - hi) - slack


def _eval_traceless_norm_ratio(case, slack):
    sv = singular_values(case["a"])
    return 2.0 * norm_from_singular_values(sv, OPERATOR) - norm_from_singular_values(
        sv, TRACE
    ) - slack


def _eval_distance_cap(case, slack):
    kind = NormKind.parse(case["kind"])
    rho = DensityMatrix(case["rho"])
    sigma = DensityMatrix(case["sigma"])
    sv = singular_values(rho.mat - sigma.mat)
    t = norm_from_singular_values(sv, kind) / norm_of_reference(kind, rho.dim)
    return t - (1.0 - sigma.min_eigenvalue) - slack


def _eval_relative_entropy_nonneg(case, slack):
    rho = DensityMatrix(case["rho"])
    sigma = DensityMatrix(case["sigma"])
    s = relative_entropy(rho, sigma)
    self_s = relative_entropy(rho, rho)
    return max(-s - slack, abs(self_s) - slack / 1000.0)


def _eval_joint_convexity(case, slack):
    t = case["t"]
    a1, b1, a2, b2 = case["a1"], case["b1"], case["a2"], case["b2"]
    mixed = relative_entropy(t * a1 + (1 - t) * a2, t * b1 + (1 - t) * b2)
    return mixed - t * relative_entropy(a1, b1) - (1 - t) * relative_entropy(a2, b2) - slack


def _eval_scaling(case, slack):
    a, b, c = case["a"], case["b"], case["c"]
    return abs(relative_entropy(c * a, c * b) - c * relative_entropy(a, b)) - 0.1 * slack


def _eval_shift_monotonicity(case, slack):
    a, b, c = case["a"], case["b"], case["c"]
    return relative_entropy(a + c, b + c) - relative_entropy(a, b) - slack


def _eval_pinching_monotonicity(case, slack):
    rho, sigma = case["rho"], case["sigma"]
    diag_rho = np.diag(np.diagonal(rho)).astype(np.complex128)
    diag_sigma = np.diag(np.diagonal(sigma)).astype(np.complex128)
    return relative_entropy(diag_rho, diag_sigma) - relative_entropy(rho, sigma) - slack


def _eval_gradient_fd(case, slack):
    rho = DensityMatrix(case["rho"])
    sigma = DensityMatrix(case["sigma"])
    delta = case["delta"]
    grad = relative_entropy_gradient(rho, sigma)
    value = float(np.trace(delta @ grad).real)
    eps = 1e-5
    fd = (
        relative_entropy(rho.mat + eps * delta, sigma)
        - relative_entropy(rho.mat - eps * delta, sigma)
    ) / (2.0 * eps)
    return abs(fd - value) - 1000.0 * slack * (1.0 + abs(value))


def _eval_pinsker_lower(case, slack):
    rho = DensityMatrix(case["rho"])
    sigma = DensityMatrix(case["sigma"])
    return lower_bound_pinsker(rho, sigma) - relative_entropy(rho, sigma) - slack


def _eval_sharp_lower_sandwich(case, slack):
    rho = DensityMatrix(case["rho"])
    sigma = DensityMatrix(case["sigma"])
    s = relative_entropy(rho, sigma)
    sv = singular_values(rho.mat - sigma.mat)
    worst = -math.inf
    for text in case["kinds"]:
        kind = NormKind.parse(text)
        t = norm_from_singular_values(sv, kind) / norm_of_reference(kind, rho.dim)
        t = min(max(t, 0.0), 1.0)
        worst = max(worst, s_of_x(min(t, 1.0 - 1e-9)) - s)
    return worst - slack


def _eval_upper_sandwich(case, slack):
    rho = DensityMatrix(case["rho"])
    sigma = DensityMatrix(case["sigma"])
    rep = bound_report(rho, sigma)
    uppers = [
        rep.upper_brat,
        rep.upper_minus_log_beta,
        rep.upper_quad,
        rep.upper_log,
        rep.upper_sharp,
    ]
    worst = -math.inf
    for up in uppers:
        if not math.isinf(up):
            worst = max(worst, rep.exact_S - up)
    return worst - slack


def _eval_branch_continuity(case, slack):
    beta = case["beta"]
    d2 = abs(_bounds._d2_low_branch(beta, beta) - _bounds._d2_high_branch(beta, beta))
    dgt2 = abs(
        _bounds._dgt2_low_branch(beta, beta) - _bounds._dgt2_high_branch(beta, beta)
    )
    return max(d2, dgt2) - slack / 1000.0


def _eval_entropy_continuity(case, slack):
    rho = DensityMatrix(case["rho"])
    sigma = DensityMatrix(case["sigma"])
    gap = abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma))
    return gap - fannes_bound(rho, sigma) - slack


def _eval_fidelity_sandwich(case, slack):
    rho = DensityMatrix(case["rho"])
    sigma = DensityMatrix(case["sigma"])
    f = fidelity(rho, sigma)
    sv = singular_values(rho.mat - sigma.mat)
    t_half = 0.5 * norm_from_singular_values(sv, TRACE)
    upper = math.sqrt(max(1.0 - f * f, 0.0))
    return max(1.0 - f - t_half, t_half - upper) - 0.1 * slack


def _eval_second_derivative_form(case, slack):
    sigma = DensityMatrix(case["sigma"])
    rec = second_derivative_check(sigma, case["delta"])
    margin = rec["fd"] - rec["form"] - 1000.0 * slack
    if case["check_equality"]:
        margin = max(margin, abs(rec["fd"] - rec["form"]) - 1000.0 * slack)
    return margin


def _eval_witness_saturation(case, slack):
    family = case["family"]
    if family == "lower":
        x, d = case["x"], case["dim"]
        rho, sigma = witness_lower(x, d)
        target = s_of_x(x)
        sv = singular_values(rho.mat - sigma.mat)
        t = 0.5 * norm_from_singular_values(sv, TRACE)
        dist_err = abs(t - x)
    else:
        T, beta, d = case["T"], case["beta"], case["dim"]
        if family == "le_beta":
            rho, sigma = witness_upper_T_le_beta(T, beta, d)
        else:
            rho, sigma = witness_upper_T_gt_beta(T, beta, d, case["J"])
        target = upper_bound_sharp_dgt2(T, beta)
        sv = singular_values(rho.mat - sigma.mat)
        dist_err = abs(norm_from_singular_values(sv, TRACE) - 2.0 * T)
    s = relative_entropy(rho, sigma)
    return max(abs(s - target), dist_err) - slack / 1000.0


# ---------------------------------------------------------------------------
# samplers: generate cases and feed them to the tracker

def _run_norm_axioms(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        kinds = [str(k) for k in cfg.kinds_for(d)]
        for i in range(cfg.samples_per_case):
            track.case(
                {
                    "dim": d,
                    "kind": kinds[i % len(kinds)],
                    "a": _rand_herm(rng, d),
                    "b": _rand_herm(rng, d),
                    "c": float(rng.uniform(-2.0, 2.0)),
                    "u": _rand_unitary(rng, d),
                }
            )


def _run_norm_envelope(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        kinds = [str(k) for k in cfg.kinds_for(d)]
        for i in range(cfg.samples_per_case):
            track.case(
                {"dim": d, "kind": kinds[i % len(kinds)], "a": _rand_herm(rng, d)}
            )


def _run_rescaled_envelope(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        kinds = [str(k) for k in cfg.kinds_for(d)]
        for i in range(cfg.samples_per_case):
            track.case(
                {"dim": d, "kind": kinds[i % len(kinds)], "a": _rand_traceless(rng, d)}
            )


def _run_traceless_norm_ratio(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        for _ in range(cfg.samples_per_case):
            track.case({"dim": d, "a": _rand_traceless(rng, d)})


def _run_distance_cap(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        kinds = [str(k) for k in cfg.kinds_for(d)]
        for i in range(cfg.samples_per_case):
            floor = float(rng.uniform(0.0, 1.0 / d))
            track.case(
                {
                    "dim": d,
                    "kind": kinds[i % len(kinds)],
                    "rho": _rand_state_raw(rng, d),
                    "sigma": _rand_state_floor_raw(rng, d, floor),
                }
            )


def _run_relative_entropy_nonneg(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        for _ in range(cfg.samples_per_case):
            track.case(
                {"dim": d, "rho": _rand_state_raw(rng, d), "sigma": _rand_state_raw(rng, d)}
            )


def _run_joint_convexity(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        for _ in range(cfg.samples_per_case):
            track.case(
                {
                    "dim": d,
                    "t": float(rng.uniform(0.0, 1.0)),
                    "a1": _rand_state_raw(rng, d),
                    "b1": _rand_state_raw(rng, d),
                    "a2": _rand_state_raw(rng, d),
                    "b2": _rand_state_raw(rng, d),
                }
            )


def _run_scaling(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        for _ in range(cfg.samples_per_case):
            track.case(
                {
                    "dim": d,
                    "a": float(rng.uniform(0.5, 2.0)) * _rand_state_raw(rng, d),
                    "b": float(rng.uniform(0.5, 2.0)) * _rand_state_raw(rng, d),
                    "c": float(rng.uniform(0.5, 2.0)),
                }
            )


def _run_shift_monotonicity(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        for _ in range(cfg.samples_per_case):
            track.case(
                {
                    "dim": d,
                    "a": float(rng.uniform(0.5, 2.0)) * _rand_state_raw(rng, d),
                    "b": float(rng.uniform(0.5, 2.0)) * _rand_state_raw(rng, d),
                    "c": float(rng.uniform(0.5, 2.0)) * _rand_state_raw(rng, d),
                }
            )


def _run_pinching_monotonicity(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        for _ in range(cfg.samples_per_case):
            floor = float(rng.uniform(1e-6, 1.0 / d))
            track.case(
                {
                    "dim": d,
                    "rho": _rand_state_raw(rng, d),
                    "sigma": _rand_state_floor_raw(rng, d, floor),
                }
            )


def _run_gradient_fd(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        for _ in range(cfg.samples_per_case):
            floor_r = (0.1 + 0.8 * float(rng.uniform())) / d
            floor_s = (0.1 + 0.8 * float(rng.uniform())) / d
            delta = _rand_traceless(rng, d)
            delta *= 0.02 / math.sqrt(float(np.sum(np.abs(delta) ** 2)))
            track.case(
                {
                    "dim": d,
                    "rho": _rand_state_floor_raw(rng, d, floor_r),
                    "sigma": _rand_state_floor_raw(rng, d, floor_s),
                    "delta": delta,
                }
            )


def _run_pinsker_lower(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        track.case({"dim": d, "rho": _basis_state(d, 0), "sigma": _basis_state(d, 1)})
        for _ in range(cfg.samples_per_case):
            track.case(
                {"dim": d, "rho": _rand_state_raw(rng, d), "sigma": _rand_state_raw(rng, d)}
            )


def _run_sharp_lower_sandwich(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        kinds = [str(k) for k in cfg.kinds_for(d)]
        track.case(
            {
                "dim": d,
                "kinds": kinds,
                "rho": _basis_state(d, 0),
                "sigma": _basis_state(d, 1),
            }
        )
        for _ in range(cfg.samples_per_case):
            track.case(
                {
                    "dim": d,
                    "kinds": kinds,
                    "rho": _rand_state_raw(rng, d),
                    "sigma": _rand_state_raw(rng, d),
                }
            )


def _run_upper_sandwich(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        for _ in range(cfg.samples_per_case):
            floor = float(rng.uniform(1e-6, 1.0 / d))
            track.case(
                {
                    "dim": d,
                    "rho": _rand_state_raw(rng, d),
                    "sigma": _rand_state_floor_raw(rng, d, floor),
                }
            )


def _run_branch_continuity(cfg, track, rng_for):
    rng = rng_for(0)
    for _ in range(cfg.samples_per_case):
        track.case({"beta": float(rng.uniform(0.01, 0.5))})


def _run_entropy_continuity(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        for _ in range(cfg.samples_per_case):
            track.case(
                {"dim": d, "rho": _rand_state_raw(rng, d), "sigma": _rand_state_raw(rng, d)}
            )


def _run_fidelity_sandwich(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        for _ in range(cfg.samples_per_case):
            track.case(
                {"dim": d, "rho": _rand_state_raw(rng, d), "sigma": _rand_state_raw(rng, d)}
            )


def _run_second_derivative_form(cfg, track, rng_for):
    for d in cfg.dims:
        rng = rng_for(d)
        mm = np.eye(d, dtype=np.complex128) / d
        ref = np.zeros((d, d), dtype=np.complex128)
        ref[0, 0], ref[1, 1] = 0.1, -0.1
        track.case({"dim": d, "sigma": mm, "delta": ref, "check_equality": True})
        for _ in range(cfg.samples_per_case):
            floor = (0.1 + 0.8 * float(rng.uniform())) / d
            delta = _rand_traceless(rng, d)
            delta *= 0.05 / math.sqrt(float(np.sum(np.abs(delta) ** 2)))
            track.case(
                {
                    "dim": d,
                    "sigma": _rand_state_floor_raw(rng, d, floor),
                    "delta": delta,
                    "check_equality": False,
                }
            )


_WITNESS_CASES = (
    {"family": "lower", "x": 0.1, "dim": 2},
    {"family": "lower", "x": 0.3, "dim": 2},
    {"family": "lower", "x": 0.6, "dim": 4},
    {"family": "le_beta", "T": 0.05, "beta": 0.3, "dim": 3},
    {"family": "le_beta", "T": 0.15, "beta": 0.3, "dim": 3},
    {"family": "le_beta", "T": 0.3, "beta": 0.3, "dim": 3},
    {"family": "le_beta", "T": 0.1, "beta": 0.2, "dim": 4},
    {"family": "gt_beta", "T": 0.2, "beta": 0.1, "dim": 3, "J": 0},
    {"family": "gt_beta", "T": 0.5, "beta": 0.1, "dim": 3, "J": 0},
    {"family": "gt_beta", "T": 0.7, "beta": 0.1, "dim": 3, "J": 0},
    {"family": "gt_beta", "T": 0.5, "beta": 0.1, "dim": 4, "J": 0},
    {"family": "gt_beta", "T": 0.5, "beta": 0.1, "dim": 4, "J": 1},
    {"family": "gt_beta", "T": 0.35, "beta": 0.15, "dim": 5, "J": 2},
)


def _run_witness_saturation(cfg, track, rng_for):
    for case in _WITNESS_CASES:
        track.case(dict(case))


_PROPERTIES = (
    ("norm_axioms", _run_norm_axioms, _eval_norm_axioms),
    ("norm_envelope", _run_norm_envelope, _eval_norm_envelope),
    ("rescaled_envelope", _run_rescaled_envelope, _eval_rescaled_envelope),
    ("traceless_norm_ratio", _run_traceless_norm_ratio, _eval_traceless_norm_ratio),
    ("distance_cap", _run_distance_cap, _eval_distance_cap),
    ("relative_entropy_nonneg", _run_relative_entropy_nonneg, _eval_relative_entropy_nonneg),
    ("joint_convexity", _run_joint_convexity, _eval_joint_convexity),
    ("scaling", _run_scaling, _eval_scaling),
    ("shift_monotonicity", _run_shift_monotonicity, _eval_shift_monotonicity),
    ("pinching_monotonicity", _run_pinching_monotonicity, _eval_pinching_monotonicity),
    ("gradient_fd", _run_gradient_fd, _eval_gradient_fd),
    ("pinsker_lower", _run_pinsker_lower, _eval_pinsker_lower),
    ("sharp_lower_sandwich", _run_sharp_lower_sandwich, _eval_sharp_lower_sandwich),
    ("upper_sandwich", _run_upper_sandwich, _eval_upper_sandwich),
    ("branch_continuity", _run_branch_continuity, _eval_branch_continuity),
    ("entropy_continuity", _run_entropy_continuity, _eval_entropy_continuity),
    ("fidelity_sandwich", _run_fidelity_sandwich, _eval_fidelity_sandwich),
    ("second_derivative_form", _run_second_derivative_form, _eval_second_derivative_form),
    ("witness_saturation", _run_witness_saturation, _eval_witness_saturation),
)

PROPERTY_NAMES = tuple(name for name, _, _ in _PROPERTIES)

_EVALUATORS = {name: ev for name, _, ev in _PROPERTIES}


class _Tracker:
    def __init__(self, name: str, evaluator, slack: float):
        self.name = name
        self.evaluator = evaluator
        self.slack = slack
        self.samples = 0
        self.violations = 0
        self.worst = -math.inf
        self.witness = None
        self._witness_margin = -math.inf

    def case(self, case: dict) -> None:
        margin = float(self.evaluator(case, self.slack))
        self.samples += 1
        self.worst = max(self.worst, margin)
        if margin > 0.0:
            self.violations += 1
            if margin > self._witness_margin:
                self._witness_margin = margin
                self.witness = {"case": _ser(case), "slack": self.slack}

    def result(self) -> PropertyResult:
        return PropertyResult(
            name=self.name,
            samples=self.samples,
            violations=self.violations,
            worst_margin=self.worst,
            witness_input=self.witness,
        )


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    """Run every property at the configured sample counts.

    Deterministic given the config: each property and dimension gets its own
    generator seeded from (seed, property index, dimension), and cases are
    evaluated sequentially. Failures are recorded, never raised.
    """
    results = []
    for prop_index, (name, runner, evaluator) in enumerate(_PROPERTIES):
        track = _Tracker(name, evaluator, cfg.slack)

        def rng_for(dim: int, _pi=prop_index) -> np.random.Generator:
            return np.random.default_rng(np.random.SeedSequence((cfg.seed, _pi, dim)))

        runner(cfg, track, rng_for)
        results.append(track.result())
    verdict = "pass" if all(r.violations == 0 for r in results) else "fail"
    return SuiteReport(config=cfg, properties=tuple(results), verdict=verdict)


def replay(property_name: str, witness_input: dict) -> dict:
    """Recompute one recorded case and return its margin.

    witness_input is the dict stored in a PropertyResult (or one of the same
    shape); the margin is reproduced bit for bit on the same build.
    """
    if property_name not in _EVALUATORS:
        raise KeyError(
            f"unknown property {property_name!r}; known: {', '.join(PROPERTY_NAMES)}"
        )
    case = _deser(witness_input["case"])
    slack = float(witness_input["slack"])
    margin = float(_EVALUATORS[property_name](case, slack))
    return {
        "property": property_name,
        "margin": margin,
        "violation": margin > 0.0,
    }
