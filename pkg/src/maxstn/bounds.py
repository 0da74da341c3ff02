"""Computable upper bounds on the optimum and per-instance certified ratios."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .approx import OmegaInfo, normalized_y, omega
from .geometry import pairwise_dist, vertex_distance_matrix
from .instance import Instance, NormalizedView, normalize
from .spanning import Solution

SQRT3 = math.sqrt(3.0)
# y may overshoot 1 by rounding when a region spans exactly twice the diameter
_Y_SLACK = 1e-9


def radius_R(y: float) -> float:
    """Radius around o that contains every vertex, in diameter units."""
    if not -1.0 <= y <= 1.0:
        raise ValueError(f"y = {y} outside [-1, 1]")
    if y <= 0.0:
        return SQRT3 / 2
    return SQRT3 / 2 + 2.0 * y / SQRT3


def ub_trivial(inst: Instance, view: NormalizedView | None = None) -> float:
    view = view or normalize(inst)
    return (inst.n - 1) * view.scale


def region_dmax(inst: Instance) -> np.ndarray:
    """Per region, the largest distance from one of its vertices to another region."""
    D, region, _ = vertex_distance_matrix(inst)
    cross = np.where(region[:, None] != region[None, :], D, -np.inf)
    per_vertex = cross.max(axis=1)
    return np.array([per_vertex[region == i].max() for i in range(inst.n)])


def ub_dmax(inst: Instance) -> float:
    """Sum of per-region d_max over all regions but the root, best root."""
    dm = region_dmax(inst)
    return math.fsum(dm) - float(dm.max())


def ub_omega(inst: Instance, view: NormalizedView, om: OmegaInfo, y: float | None = None) -> float:
    if inst.n < 4:
        raise ValueError("ub_omega needs n >= 4")
    if y is None:
        y = _clamped_y(inst, view)
    return (inst.n - 1) * min(1.0, (1.0 + om.x + radius_R(y)) / 2.0) * view.scale


def ub_refined(inst: Instance, view: NormalizedView, om: OmegaInfo, y: float | None = None) -> float:
    """Like :func:`ub_omega` with the ball radius replaced by the mean containment radius."""
    if inst.n < 4:
        raise ValueError("ub_refined needs n >= 4")
    if y is None:
        y = _clamped_y(inst, view)
    refined = (inst.n - 1) / 2.0 * (1.0 + om.z_hat + radius_R(y)) * view.scale
    return min(ub_trivial(inst, view), refined)


def omega_containment_check(inst: Instance, view: NormalizedView | None = None) -> bool:
    """True iff every vertex lies within R(y) diameters of o."""
    view = view or normalize(inst)
    if view.degenerate:
        return True
    limit = radius_R(_clamped_y(inst, view)) * view.scale * (1.0 + 1e-9)
    pts = np.concatenate([r.vertices for r in inst.regions])
    d = pairwise_dist(pts, view.o[None, :])[:, 0]
    return bool((d <= limit).all())


def _clamped_y(inst: Instance, view: NormalizedView) -> float:
    y = normalized_y(inst, view)
    if y > 1.0 + _Y_SLACK:
        raise ValueError(f"monochromatic diameter exceeds twice the bichromatic one (y = {y})")
    return min(y, 1.0)


@dataclass(frozen=True)
class BoundsReport:
    """All upper bounds in original units; normalized values divide by ``D``."""

    n: int
    D: float
    y: float
    R_y: float
    x: float | None
    z_hat: float | None
    ub_trivial: float
    ub_dmax: float
    ub_omega: float | None
    ub_refined: float | None
    ub_best: float

    @property
    def degenerate(self) -> bool:
        return self.D == 0.0

    def normalized(self) -> dict:
        scale = self.D if self.D > 0 else 1.0
        return {k: (None if getattr(self, k) is None else getattr(self, k) / scale)
                for k in ("ub_trivial", "ub_dmax", "ub_omega", "ub_refined", "ub_best")}

    def to_dict(self) -> dict:
        out = asdict(self)
        out["normalized"] = self.normalized()
        return out


def bounds_report(inst: Instance) -> BoundsReport:
    view = normalize(inst)
    y = _clamped_y(inst, view)
    R = radius_R(y)
    triv = ub_trivial(inst, view)
    dmax = ub_dmax(inst)
    x = z = uo = ur = None
    if inst.n >= 4 and not view.degenerate:
        om = omega(inst, view)
        x, z = om.x, om.z_hat
        uo = ub_omega(inst, view, om, y)
        ur = ub_refined(inst, view, om, y)
    best = min(b for b in (triv, dmax, uo, ur) if b is not None)
    return BoundsReport(inst.n, view.scale, y, R, x, z, triv, dmax, uo, ur, best)


def certified_ratio(sol: Solution, report: BoundsReport) -> float:
    if report.degenerate or report.ub_best == 0.0:
        return 1.0
    return sol.length / report.ub_best
