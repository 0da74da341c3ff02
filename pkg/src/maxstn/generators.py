"""Named instances from the literature and seeded random families."""
from __future__ import annotations

import math

import numpy as np

from .instance import Instance

_SQ3 = math.sqrt(3.0)
TIGHT_JITTER = 1e-6


def _triangle():
    return (0.0, 0.0), (1.0, 0.0), (0.5, _SQ3 / 2)


def gen_example_star() -> Instance:
    """Four regions on a unit equilateral triangle; the optimum is a length-3 star."""
    a, b, c = _triangle()
    return Instance.from_points([[a, b], [b, c], [a, c], [a, b, c]])


def gen_example_greedy() -> Instance:
    """Three regions where farthest-first greedy is suboptimal; d is the midpoint of bc."""
    a, b, c = _triangle()
    d = (0.75, _SQ3 / 4)
    return Instance.from_points([[a, b], [a, c], [d]])


def tight_apex_height(eps: float) -> float:
    return math.sqrt((1.0 - eps) ** 2 - 0.25)


def gen_tight(n: int, eps: float) -> Instance:
    """Isosceles family on which A2 approaches sqrt(2 - sqrt(3)).

    X1 = {a, c}, X2 = {b, c} with |ab| = 1 and |ca| = |cb| = 1 - eps; the
    remaining n - 2 singletons sit at distance 1 - eps from c below ab, with
    horizontal offsets of at most 1e-6 from the midpoint so they are distinct.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if not 0.0 < eps < 0.5:
        raise ValueError(f"eps must lie in (0, 1/2), got {eps}")
    r = 1.0 - eps
    h = tight_apex_height(eps)
    a, b, c = (0.0, 0.0), (1.0, 0.0), (0.5, h)
    k = n - 2
    if k == 1:
        offsets = [0.0]
    else:
        offsets = [TIGHT_JITTER * (2.0 * i / (k - 1) - 1.0) for i in range(k)]
    singles = [[(0.5 + d, h - math.sqrt(r * r - d * d))] for d in offsets]
    return Instance.from_points([[a, c], [b, c]] + singles)


def gen_random(n: int, k_max: int, dim: int = 2, seed: int = 0) -> Instance:
    """Vertices uniform in the unit cube, region sizes uniform in [1, k_max]."""
    if n < 2 or k_max < 1 or dim < 2:
        raise ValueError("need n >= 2, k_max >= 1, dim >= 2")
    rng = np.random.default_rng(seed)
    sizes = rng.integers(1, k_max + 1, size=n)
    return Instance.from_points([rng.random((int(s), dim)) for s in sizes])
