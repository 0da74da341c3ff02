import math

import pytest

from maxstn.generators import (
    TIGHT_JITTER,
    gen_example_greedy,
    gen_example_star,
    gen_random,
    gen_tight,
    tight_apex_height,
)
from maxstn.geometry import bichromatic_diameter, dist
from maxstn.instance import dumps_instance, validate


def test_named_examples_shape():
    star = gen_example_star()
    assert [len(r.vertices) for r in star.regions] == [2, 2, 2, 3]
    greedy = gen_example_greedy()
    assert [len(r.vertices) for r in greedy.regions] == [2, 2, 1]
    d = greedy.regions[2].vertices[0]
    assert d[0] == 0.75 and d[1] == pytest.approx(math.sqrt(3) / 4)


@pytest.mark.parametrize("n, eps", [(3, 0.01), (6, 0.01), (20, 1 / 19), (100, 1 / 99)])
def test_tight_geometry(n, eps):
    inst = gen_tight(n, eps)
    assert inst.n == n and validate(inst) == []
    a, c = inst.regions[0].vertices
    b, c2 = inst.regions[1].vertices
    assert (c == c2).all()
    assert dist(a, b) == 1.0
    assert dist(c, a) == pytest.approx(1 - eps, abs=1e-14)
    assert dist(c, b) == pytest.approx(1 - eps, abs=1e-14)
    for r in inst.regions[2:]:
        (p,) = r.vertices
        assert dist(p, c) == pytest.approx(1 - eps, abs=1e-13)
        assert abs(p[0] - 0.5) <= TIGHT_JITTER * (1 + 1e-9)
    assert bichromatic_diameter(inst).length == pytest.approx(1.0, abs=1e-12)
    assert c[1] == tight_apex_height(eps)


def test_tight_singletons_distinct():
    inst = gen_tight(50, 0.02)
    pts = {tuple(r.vertices[0]) for r in inst.regions[2:]}
    assert len(pts) == 48


@pytest.mark.parametrize("n, eps", [(2, 0.1), (5, 0.0), (5, 0.5), (5, -0.1)])
def test_tight_rejects(n, eps):
    with pytest.raises(ValueError):
        gen_tight(n, eps)


def test_random_is_seeded():
    assert dumps_instance(gen_random(6, 3, 3, 42)) == dumps_instance(gen_random(6, 3, 3, 42))
    assert dumps_instance(gen_random(6, 3, 3, 42)) != dumps_instance(gen_random(6, 3, 3, 43))


@pytest.mark.parametrize("seed", range(10))
def test_random_shape(seed):
    inst = gen_random(7, 3, 2 + seed % 2, seed)
    assert inst.n == 7 and inst.dim == 2 + seed % 2
    assert all(1 <= len(r.vertices) <= 3 for r in inst.regions)
    assert all(((r.vertices >= 0) & (r.vertices < 1)).all() for r in inst.regions)


def test_random_rejects():
    with pytest.raises(ValueError):
        gen_random(1, 3)
    with pytest.raises(ValueError):
        gen_random(4, 0)
    with pytest.raises(ValueError):
        gen_random(4, 2, dim=1)
