"""Exhaustive exact optimum over all vertex selections.

The optimum over a polyhedral region is attained at a vertex (a sum of
distances to fixed points is convex), so enumerating vertex selections and
taking a maximum spanning tree of each is exact.  No pruning is done.
"""
from __future__ import annotations

import math

import numpy as np

from .geometry import vertex_distance_matrix
from .instance import Instance
from .spanning import EXACT, Selection, Solution, max_spanning_tree

DEFAULT_BUDGET = 10**6
_SATURATE = 2**63 - 1
_CHUNK_CELLS = 2**21


class BudgetExceeded(RuntimeError):
    def __init__(self, count: int, budget: int):
        super().__init__(f"selection space has {count} elements, budget is {budget}")
        self.count = count
        self.budget = budget


def count_selections(inst: Instance) -> int:
    """Number of vertex selections, saturating at 2**63 - 1."""
    total = 1
    for r in inst.regions:
        total *= len(r)
        if total > _SATURATE:
            return _SATURATE
    return total


def batched_mst_lengths(W: np.ndarray) -> np.ndarray:
    """Maximum spanning tree weight for a stack of (S, n, n) weight matrices.

    All maximum spanning trees of a graph share one multiset of edge weights,
    so the fsum below equals the length :func:`max_spanning_tree` reports for
    the same points, bit for bit.
    """
    S, n, _ = W.shape
    rows = np.arange(S)
    in_tree = np.zeros((S, n), dtype=bool)
    in_tree[:, 0] = True
    key = W[:, 0, :].copy()
    picked = np.empty((S, n - 1))
    for step in range(n - 1):
        masked = np.where(in_tree, -np.inf, key)
        v = np.argmax(masked, axis=1)
        picked[:, step] = masked[rows, v]
        in_tree[rows, v] = True
        np.maximum(key, W[rows, v, :], out=key)
    return np.array([math.fsum(row) for row in picked.tolist()])


def _unravel(flat: np.ndarray, sizes: list[int]) -> np.ndarray:
    """Mixed-radix digits of ``flat``, first region most significant."""
    out = np.empty((len(flat), len(sizes)), dtype=np.int64)
    rest = flat.copy()
    for pos in range(len(sizes) - 1, -1, -1):
        rest, out[:, pos] = np.divmod(rest, sizes[pos])
    return out


def _selection_lengths(inst: Instance) -> np.ndarray:
    sizes = [len(r) for r in inst.regions]
    offsets = np.cumsum([0] + sizes[:-1])
    Dm, _, _ = vertex_distance_matrix(inst)
    n = inst.n
    count = math.prod(sizes)
    chunk = max(1, _CHUNK_CELLS // (n * n))
    out = np.empty(count)
    for start in range(0, count, chunk):
        flat = np.arange(start, min(count, start + chunk))
        # flat order is lexicographic order on selections
        local = _unravel(flat, sizes)
        G = local + offsets[None, :]
        W = Dm[G[:, :, None], G[:, None, :]]
        out[start:start + len(flat)] = batched_mst_lengths(W)
    return out


def exact_opt(inst: Instance, budget: int = DEFAULT_BUDGET) -> Solution:
    """Longest spanning tree over every vertex selection.

    Raises :class:`BudgetExceeded` when the selection space is larger than
    ``budget``.  Among maximizers the lexicographically smallest selection is
    returned.
    """
    count = count_selections(inst)
    if count > budget:
        raise BudgetExceeded(count, budget)
    lengths = _selection_lengths(inst)
    # argmax returns the first maximizer, i.e. the lexicographically smallest
    first = int(np.argmax(lengths))
    idx = _unravel(np.array([first]), [len(r) for r in inst.regions])[0]
    sel = Selection.from_instance(inst, [int(i) for i in idx])
    return Solution(sel, max_spanning_tree(sel), EXACT)
