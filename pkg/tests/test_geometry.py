import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxstn.generators import gen_random, gen_tight
from maxstn.geometry import (
    bichromatic_diameter,
    dist,
    farthest_vertex_from,
    monochromatic_diameter,
    pairwise_dist,
)
from maxstn.instance import Instance

from oracles import brute_pairs, regions_of

SQ3 = math.sqrt(3)


@pytest.mark.parametrize("p, q, expected", [
    ((0, 0), (1, 0), 1.0),
    ((0, 0), (0.5, SQ3 / 2), 1.0),
    ((0, 0), (0.75, SQ3 / 4), SQ3 / 2),
])
def test_dist_examples(p, q, expected):
    assert dist(p, q) == pytest.approx(expected, abs=1e-15)


def test_dist_dimension_mismatch():
    with pytest.raises(ValueError):
        dist((0, 0), (0, 0, 1))


def test_pairwise_matches_scalar_bitwise():
    rng = np.random.default_rng(3)
    P, Q = rng.random((7, 3)), rng.random((5, 3))
    M = pairwise_dist(P, Q)
    for i in range(7):
        for j in range(5):
            assert M[i, j] == dist(P[i], Q[j])


coords = st.floats(-100, 100, allow_nan=False, allow_infinity=False)
point3 = st.tuples(coords, coords, coords)


@given(point3, point3, point3)
def test_triangle_inequality(p, q, r):
    lhs = dist(p, r)
    rhs = dist(p, q) + dist(q, r)
    assert lhs <= rhs * (1 + 1e-12) + 1e-300


@given(point3, point3)
def test_dist_symmetric_and_zero_iff_equal(p, q):
    assert dist(p, q) == dist(q, p)
    assert (dist(p, q) == 0) == (tuple(p) == tuple(q)) or dist(p, q) < 1e-150


def test_bichromatic_examples(star_inst):
    assert bichromatic_diameter(star_inst).length == pytest.approx(1.0, abs=1e-15)
    two = Instance.from_points([[(0, 0)], [(1, 0)]])
    pair = bichromatic_diameter(two)
    assert (pair.region_a, pair.vertex_a, pair.region_b, pair.vertex_b) == (0, 0, 1, 0)
    assert pair.length == 1.0


@pytest.mark.parametrize("n", [3, 4, 7, 12])
def test_tight_bichromatic_pair_is_ab(n):
    inst = gen_tight(n, 0.01)
    pair = bichromatic_diameter(inst)
    assert pair.length == brute_pairs(regions_of(inst), same=False)
    assert pair.length == pytest.approx(1.0, abs=1e-12)
    assert (pair.region_a, pair.vertex_a, pair.region_b, pair.vertex_b) == (0, 0, 1, 0)


def test_monochromatic_examples(star_inst):
    assert monochromatic_diameter(star_inst).length == pytest.approx(1.0, abs=1e-15)
    singles = Instance.from_points([[(0, 0)], [(1, 0)], [(2, 3)]])
    assert monochromatic_diameter(singles).length == 0.0
    mp = monochromatic_diameter(gen_tight(6, 0.01))
    assert mp.length == pytest.approx(0.99, abs=1e-12)
    assert mp.region_a == mp.region_b == 0


def test_diameter_tie_break_is_lexicographic(star_inst):
    # pairs a-b, a-c, b-c all have unit length; (X1:a, X2:b) comes first
    pair = bichromatic_diameter(star_inst)
    assert (pair.region_a, pair.vertex_a, pair.region_b, pair.vertex_b) == (0, 0, 1, 0)


def test_farthest_vertex_examples():
    assert farthest_vertex_from((0.5, 0), [(0, 0), (1, 0)]) == (0, 0.5)
    k, d = farthest_vertex_from((0.5, 0), [(0.5, 0.1), (0.5, 0.3)])
    assert k == 1 and d == pytest.approx(0.3)
    eps = 0.01
    k, d = farthest_vertex_from((0.5, 0.0), gen_tight(6, eps).regions[0].vertices)
    assert k == 1
    assert d == pytest.approx(math.sqrt((1 - eps) ** 2 - 0.25), abs=1e-15)


def test_farthest_vertex_empty_region():
    with pytest.raises(ValueError):
        farthest_vertex_from((0, 0), np.empty((0, 2)))


def test_diameters_need_regions():
    with pytest.raises(ValueError):
        bichromatic_diameter(Instance.from_points([[(0, 0), (1, 1)]]))


@pytest.mark.parametrize("seed", range(25))
def test_diameters_equal_brute_force(seed):
    inst = gen_random(2 + seed % 5, 4, 2 + seed % 3, seed)
    regions = regions_of(inst)
    assert bichromatic_diameter(inst).length == pytest.approx(brute_pairs(regions, False), rel=1e-15)
    assert monochromatic_diameter(inst).length == pytest.approx(brute_pairs(regions, True), rel=1e-15)
    # no region is wider than twice the bichromatic diameter
    assert monochromatic_diameter(inst).length <= 2 * bichromatic_diameter(inst).length


def _rotation(dim, rng):
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)))
    return q * np.sign(np.diag(r))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 3]))
def test_bichromatic_invariant_under_rigid_motion(seed, dim):
    rng = np.random.default_rng(seed)
    inst = gen_random(5, 3, dim, seed)
    Q = _rotation(dim, rng)
    t = rng.normal(size=dim) * 10
    moved = Instance.from_points([r.vertices @ Q.T + t for r in inst.regions])
    a = bichromatic_diameter(inst).length
    b = bichromatic_diameter(moved).length
    assert b == pytest.approx(a, rel=1e-9)
