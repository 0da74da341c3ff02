import math

import numpy as np
import pytest

from maxstn.generators import gen_random, gen_tight
from maxstn.instance import Instance
from maxstn.oracle import BudgetExceeded, _unravel, batched_mst_lengths, count_selections, exact_opt
from maxstn.spanning import EXACT, Selection, max_spanning_tree

from oracles import brute_exact, regions_of

SQ3 = math.sqrt(3)


def test_count_selections(star_inst, greedy_inst):
    assert count_selections(star_inst) == 24
    assert count_selections(Instance.from_points([[(0, 0)], [(1, 0)]])) == 1
    assert count_selections(greedy_inst) == 4


def test_count_saturates():
    regions = [[(0, 0), (1, 0), (2, 0), (3, 0)]] * 40
    assert count_selections(Instance.from_points(regions)) == 2**63 - 1


def test_examples(star_inst, greedy_inst):
    sol = exact_opt(star_inst)
    assert sol.producer == EXACT
    assert sol.length == pytest.approx(3.0, abs=1e-9)
    sol = exact_opt(greedy_inst)
    assert sol.length == pytest.approx(1 + SQ3 / 2, abs=1e-9)


def test_budget_refusal(star_inst):
    with pytest.raises(BudgetExceeded) as info:
        exact_opt(star_inst, budget=23)
    assert info.value.count == 24 and info.value.budget == 23
    assert exact_opt(star_inst, budget=24).length == pytest.approx(3.0)


@pytest.mark.parametrize("seed", range(25))
def test_matches_brute_force(seed):
    inst = gen_random(2 + seed % 4, 3, 2 + seed % 2, seed)
    assert exact_opt(inst).length == brute_exact(regions_of(inst))


def test_returns_lexicographically_first_maximizer(star_inst):
    # (a, b, a, a) already reaches 3 as the star at b
    assert exact_opt(star_inst).selection.indices == (0, 0, 0, 0)


def test_length_matches_its_tree(star_inst):
    sol = exact_opt(gen_random(5, 3, 2, 7))
    again = max_spanning_tree(Selection.from_instance(gen_random(5, 3, 2, 7), sol.selection.indices))
    assert sol.length == again.length


def test_batched_lengths_bitwise():
    rng = np.random.default_rng(1)
    pts = rng.random((6, 5, 2))
    W = np.sqrt(((pts[:, :, None, :] - pts[:, None, :, :]) ** 2).sum(-1))
    got = batched_mst_lengths(W)
    for k in range(6):
        assert got[k] == max_spanning_tree(Selection.of_points(pts[k])).length


def test_unravel_beyond_64_dims():
    sizes = [2] * 70
    idx = _unravel(np.array([0, 1, 5]), sizes)
    assert idx.shape == (3, 70)
    assert list(idx[2][-3:]) == [1, 0, 1]


def test_tight_family_exact():
    inst = gen_tight(12, 0.05)
    assert exact_opt(inst).length == pytest.approx((12 - 1) * 0.95, abs=1e-9)
