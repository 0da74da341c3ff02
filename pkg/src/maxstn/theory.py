"""Numeric verification of the ratio analysis behind A2.

``g(z, y)`` is the worst-case ratio of A2 for y >= 0 and ``f(z)`` the one for
y <= 0, with z the mean distance from o of the representatives inside the
small ball.  The closed-form constants are evaluated in double precision and
cross-checked with mpmath at 50 digits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath
import numpy as np

SQ3 = math.sqrt(3.0)
DOMAIN = (0.0, 0.2)
_DOMAIN_SLACK = 1e-12


@dataclass(frozen=True)
class RatioConstants:
    rho: float
    z0: float
    y0: float
    case1_min: float
    prelim_508: float
    prelim_506: float
    x_shortcut: float


def closed_form_constants() -> RatioConstants:
    r4_3 = 3.0 ** 0.25
    r4_27 = 27.0 ** 0.25
    y0 = (8 * SQ3 - 2 * r4_27 - 9) / 13
    return RatioConstants(
        rho=(1 + y0) / 2,
        z0=(8 * r4_3 - SQ3 - 6) / 26,
        y0=y0,
        case1_min=math.sqrt(2 - SQ3),
        prelim_508=(1 + 2 * math.sqrt(2 - SQ3)) / 4,
        prelim_506=(4 * SQ3 - 1 - 2 * math.sqrt(9 - 3 * SQ3)) / 4,
        x_shortcut=(5 + math.sqrt(29)) / 20,
    )


CONSTANTS = closed_form_constants()
RHO = CONSTANTS.rho


def high_precision_constants(dps: int = 50) -> dict[str, mpmath.mpf]:
    with mpmath.workdps(dps):
        s3 = mpmath.sqrt(3)
        y0 = (8 * s3 - 2 * mpmath.root(27, 4) - 9) / 13
        return {
            "rho": (4 * s3 + 2 - mpmath.root(27, 4)) / 13,
            "rho_from_y0": (1 + y0) / 2,
            "z0": (8 * mpmath.root(3, 4) - s3 - 6) / 26,
            "y0": y0,
            "case1_min": mpmath.sqrt(2 - s3),
            "prelim_508": (1 + 2 * mpmath.sqrt(2 - s3)) / 4,
            "prelim_506": (4 * s3 - 1 - 2 * mpmath.sqrt(9 - 3 * s3)) / 4,
            "x_shortcut": (5 + mpmath.sqrt(29)) / 20,
        }


def _check_domain(name, value):
    lo, hi = DOMAIN
    v = np.asarray(value, dtype=float)
    if not np.all((v >= lo - _DOMAIN_SLACK) & (v <= hi + _DOMAIN_SLACK)):
        raise ValueError(f"{name} outside [{lo}, {hi}]")


def g(z, y):
    """Ratio bound for y >= 0: max(T1, T2 bound) / min(trivial, refined bound)."""
    _check_domain("z", z)
    _check_domain("y", y)
    z = np.asarray(z, dtype=float)
    y = np.asarray(y, dtype=float)
    num = np.maximum(1 + y, np.sqrt(1 + 4 * z * z))
    den = np.minimum(2.0, 1 + SQ3 / 2 + z + 2 * y / SQ3)
    out = num / den
    return float(out) if out.ndim == 0 else out


def f(z):
    """Ratio bound for y <= 0 before the denominator saturates."""
    _check_domain("z", z)
    z = np.asarray(z, dtype=float)
    out = 2 * np.sqrt(1 + 4 * z * z) / (2 + SQ3 + 2 * z)
    return float(out) if out.ndim == 0 else out


# closed forms of g on the four pieces cut out by the curve 1+y = sqrt(1+4z^2)
# and the line 1 + sqrt(3)/2 + z + 2y/sqrt(3) = 2
def g_region_II(z, y):
    return (1 + y) / (1 + SQ3 / 2 + z + 2 * y / SQ3)


def g_region_III(z, y):
    return math.sqrt(1 + 4 * z * z) / (1 + SQ3 / 2 + z + 2 * y / SQ3)


def g_on_curve(z):
    """g restricted to the curve 1+y = sqrt(1+4z^2)."""
    s = math.sqrt(1 + 4 * z * z)
    return s / (1 - SQ3 / 6 + z + 2 * s / SQ3)


def central_diff(fn, x, h=1e-6):
    return (fn(x + h) - fn(x - h)) / (2 * h)


@dataclass
class CaseAnalysis:
    grid_step: float
    g_min: float
    g_argmin: tuple[float, float]
    f_min: float
    f_argmin: float
    constants: RatioConstants = field(default_factory=closed_form_constants)


def minimize_case_analysis(grid_step: float = 1e-3) -> CaseAnalysis:
    """Grid-minimize g over [0, 0.2]^2 and f over [0, 0.2]."""
    if grid_step > 1e-3:
        raise ValueError("grid_step must be <= 1e-3")
    k = int(round(0.2 / grid_step))
    axis = np.linspace(0.0, 0.2, k + 1)
    Z, Y = np.meshgrid(axis, axis, indexing="ij")
    G = g(Z, Y)
    i, j = np.unravel_index(int(np.argmin(G)), G.shape)
    F = f(axis)
    m = int(np.argmin(F))
    return CaseAnalysis(grid_step, float(G[i, j]), (float(axis[i]), float(axis[j])),
                        float(F[m]), float(axis[m]))


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    expected: float
    tol: float
    passed: bool


def _close(name, value, expected, tol) -> Check:
    return Check(name, float(value), float(expected), tol, abs(value - expected) <= tol)


def _holds(name, condition: bool, value: float = 0.0) -> Check:
    return Check(name, float(value), 0.0, 0.0, bool(condition))


def verify_theory(grid_step: float = 1e-3, perturb: float = 0.0) -> list[Check]:
    """Run every numeric check; ``perturb`` shifts the claimed rho (self-test)."""
    c = closed_form_constants()
    rho = c.rho + perturb
    hp = high_precision_constants()
    res = minimize_case_analysis(grid_step)
    z0, y0 = c.z0, c.y0
    checks = [
        _close("rho closed form vs 50-digit", rho, float(hp["rho"]), 1e-15),
        _close("rho = (1+y0)/2", rho, (1 + y0) / 2, 1e-15),
        _close("z0 vs 50-digit", z0, float(hp["z0"]), 1e-15),
        _close("y0 vs 50-digit", y0, float(hp["y0"]), 1e-15),
        _close("curve through p: 1+y0 = sqrt(1+4 z0^2)", 1 + y0, math.sqrt(1 + 4 * z0 * z0), 1e-12),
        _close("line through p: 1+sqrt3/2+z0+2y0/sqrt3 = 2", 1 + SQ3 / 2 + z0 + 2 * y0 / SQ3, 2.0, 1e-12),
        _close("g(z0, y0) = rho", g(z0, y0), rho, 1e-12),
        _close("grid min g = rho", res.g_min, rho, 1e-4),
        _close("grid argmin z ~ z0", res.g_argmin[0], z0, 1e-3),
        _close("grid argmin y ~ y0", res.g_argmin[1], y0, 1e-3),
        _holds("grid min g >= rho", res.g_min >= rho - 1e-12, res.g_min),
        _close("f(1-sqrt3/2) = sqrt(2-sqrt3)", f(1 - SQ3 / 2), c.case1_min, 1e-12),
        _close("grid min f = sqrt(2-sqrt3)", res.f_min, c.case1_min, 1e-6),
        _close("grid argmin f ~ 1-sqrt3/2", res.f_argmin, 1 - SQ3 / 2, grid_step),
        _holds("f non-increasing on [0, 1-sqrt3/2]", bool(np.all(np.diff(f(np.linspace(0, 1 - SQ3 / 2, 1001))) <= 1e-15))),
        _close("(5+sqrt29)/20", c.x_shortcut, 0.5192582, 1e-7),
        _close("(1+2 sqrt(2-sqrt3))/4 vs 50-digit", c.prelim_508, float(hp["prelim_508"]), 1e-15),
        _holds("preliminary 0.508 rounds to 0.508", math.floor(c.prelim_508 * 1000) == 508, c.prelim_508),
        _close("(4sqrt3-1-2sqrt(9-3sqrt3))/4 vs 50-digit", c.prelim_506, float(hp["prelim_506"]), 1e-15),
        _holds("preliminary 0.506 rounds to 0.506", math.floor(c.prelim_506 * 1000) == 506, c.prelim_506),
        _holds("rho > 1/2", rho > 0.5, rho),
    ]
    # sign certificates for the partial derivatives in regions II and III
    samples = [(0.05, 0.15), (0.10, 0.10), (0.15, 0.05), (0.2, 0.2), (0.0, 0.0)]
    d2 = [central_diff(lambda t: g_region_II(z, t), y) for z, y in samples]
    d3 = [central_diff(lambda t: g_region_III(z, t), y) for z, y in samples]
    checks.append(_holds("dg/dy > 0 in region II", all(d > 0 for d in d2), min(d2)))
    checks.append(_holds("dg/dy < 0 in region III", all(d < 0 for d in d3), max(d3)))
    dG = [central_diff(g_on_curve, z) for z in np.linspace(1e-3, 0.2 - 1e-3, 50)]
    checks.append(_holds("g decreasing along the curve", all(d < 0 for d in dG), max(dG)))
    return checks
