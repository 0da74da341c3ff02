"""Approximation algorithms A1 (ratio 1/2) and A2 (ratio 0.5114).

A1 takes a bichromatic diameter pair (a, b) and returns the longer of the two
stars centered at a and b.  A2 adds two candidates: T1, the longer star on a
monochromatic diameter pair (used when that diameter is at least the
bichromatic one), and T2, the segment ab plus a connection from every other
region's vertex farthest from o = (a+b)/2 to whichever of a, b is farther.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import dist, farthest_vertex_from, monochromatic_diameter, pairwise_dist
from .instance import Instance, NormalizedView, normalize
from .oracle import DEFAULT_BUDGET, exact_opt
from .spanning import (
    A1_STAR_A,
    A1_STAR_B,
    A2_T1,
    A2_T2,
    Selection,
    Solution,
    star,
    two_star,
)


@dataclass(frozen=True)
class OmegaInfo:
    """Smallest ball around o holding floor(n/2) of the non-diameter regions."""

    o: np.ndarray
    x: float
    inside: tuple[int, ...]
    containment_radii: dict[int, float]

    @property
    def z_hat(self) -> float:
        """Mean containment radius over the regions inside the ball."""
        return float(np.mean([self.containment_radii[i] for i in self.inside]))


def _far_from_pair(vertices: np.ndarray, p, q) -> int:
    """Vertex maximizing max(|vp|, |vq|); ties go to the smallest index."""
    d = pairwise_dist(vertices, np.array([p, q], dtype=float)).max(axis=1)
    return int(np.argmax(d))


def _two_center_stars(inst: Instance, region_p: int, vp: int, region_q: int, vq: int,
                      same_region: bool, producers=(A1_STAR_A, A1_STAR_B)) -> tuple[Solution, Solution]:
    """Stars centered at p and at q, other regions picking the far-from-{p,q} vertex."""
    p = inst.vertex(region_p, vp)
    q = inst.vertex(region_q, vq)
    picks = []
    for i, r in enumerate(inst.regions):
        if i == region_p:
            picks.append(vp)
        elif i == region_q:
            picks.append(vq)
        else:
            picks.append(_far_from_pair(r.vertices, p, q))
    sel_p = Selection.from_instance(inst, picks)
    if same_region:
        # p and q live in one region; the q-star swaps that region's representative
        picks_q = list(picks)
        picks_q[region_q] = vq
        sel_q = Selection.from_instance(inst, picks_q)
    else:
        sel_q = sel_p
    return (Solution(sel_p, star(sel_p, region_p), producers[0]),
            Solution(sel_q, star(sel_q, region_q), producers[1]))


def _zero_solution(inst: Instance, producer: str) -> Solution:
    sel = Selection.from_instance(inst, [0] * inst.n)
    return Solution(sel, star(sel, 0), producer)


def a1_stars(inst: Instance, view: NormalizedView) -> tuple[Solution, Solution]:
    """The stars S_a and S_b on the bichromatic diameter pair; together >= n diameters."""
    dp = view.diam_pair
    return _two_center_stars(inst, dp.region_a, dp.vertex_a, dp.region_b, dp.vertex_b, False)


def algo_a1(inst: Instance, view: NormalizedView | None = None) -> Solution:
    """Longer of the two stars centered at the bichromatic diameter endpoints.

    Length is at least n/2 times the bichromatic diameter.
    """
    if inst.n < 2:
        raise ValueError("A1 needs at least two regions")
    view = view or normalize(inst)
    if view.degenerate:
        return _zero_solution(inst, A1_STAR_A)
    sa, sb = a1_stars(inst, view)
    return sb if sb.length > sa.length else sa


def omega(inst: Instance, view: NormalizedView) -> OmegaInfo:
    if inst.n < 4:
        raise ValueError("omega needs n >= 4")
    dp = view.diam_pair
    radii = {}
    for i, r in enumerate(inst.regions):
        if i in (dp.region_a, dp.region_b):
            continue
        _, d = farthest_vertex_from(view.o, r.vertices)
        radii[i] = d / view.scale if view.scale > 0 else 0.0
    m = inst.n // 2
    order = sorted(radii, key=lambda i: (radii[i], i))
    inside = tuple(sorted(order[:m]))
    return OmegaInfo(view.o, radii[order[m - 1]], inside, radii)


def candidate_t1(inst: Instance, view: NormalizedView | None = None) -> Solution:
    """Longer star on the monochromatic diameter pair a1, b1.

    Length is at least (n-1)(1+y)/2 in units of the bichromatic diameter,
    where 1+y is the normalized monochromatic diameter.
    """
    mp = monochromatic_diameter(inst)
    j = mp.region_a
    s1, s2 = _two_center_stars(inst, j, mp.vertex_a, j, mp.vertex_b, True, (A2_T1, A2_T1))
    return s2 if s2.length > s1.length else s1


def candidate_t2(inst: Instance, view: NormalizedView, om: OmegaInfo | None = None) -> Solution:
    """Segment ab plus each other region's farthest-from-o vertex joined to a or b."""
    dp = view.diam_pair
    ra, rb = dp.region_a, dp.region_b
    picks, assignment = [], {}
    for i, r in enumerate(inst.regions):
        if i == ra:
            picks.append(dp.vertex_a)
        elif i == rb:
            picks.append(dp.vertex_b)
        else:
            k, _ = farthest_vertex_from(view.o, r.vertices)
            picks.append(k)
            v = r.vertices[k]
            assignment[i] = rb if dist(v, view.b) > dist(v, view.a) else ra
    sel = Selection.from_instance(inst, picks)
    return Solution(sel, two_star(sel, ra, rb, assignment), A2_T2)


def normalized_y(inst: Instance, view: NormalizedView) -> float:
    """Monochromatic diameter over bichromatic diameter, minus one."""
    if view.degenerate:
        return -1.0
    return monochromatic_diameter(inst).length / view.scale - 1.0


def a2_candidates(inst: Instance, view: NormalizedView | None = None) -> list[Solution]:
    """A2's candidate trees in tie-break precedence order (n >= 4)."""
    view = view or normalize(inst)
    out = [candidate_t2(inst, view)]
    if normalized_y(inst, view) >= 0.0:
        out.append(candidate_t1(inst, view))
    out.extend(a1_stars(inst, view))
    return out


def algo_a2(inst: Instance, budget: int = DEFAULT_BUDGET) -> Solution:
    """Ratio 0.5114 approximation.

    For n <= 3 the selection space is searched exhaustively.  Otherwise the
    longest of T2, T1 (only when y >= 0) and the two A1 stars is returned,
    earlier candidates winning ties.
    """
    if inst.n < 2:
        raise ValueError("A2 needs at least two regions")
    if inst.n <= 3:
        return exact_opt(inst, budget)
    view = normalize(inst)
    if view.degenerate:
        return _zero_solution(inst, A2_T2)
    best = None
    for cand in a2_candidates(inst, view):
        if best is None or cand.length > best.length:
            best = cand
    return best
