"""Spanning trees over one representative point per region.

Tree lengths are ``math.fsum`` of the edge lengths, i.e. the correctly
rounded sum.  Two trees with the same multiset of edges therefore have the
same float length regardless of the order in which edges were found.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .geometry import dist, pairwise_dist


@dataclass(frozen=True, eq=False)
class Selection:
    """One representative per region: vertex indices and their coordinates."""

    indices: tuple[int, ...]
    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))

    @classmethod
    def from_instance(cls, inst, indices: Sequence[int]) -> "Selection":
        pts = [inst.regions[r].vertices[k] for r, k in enumerate(indices)]
        return cls(tuple(indices), np.array(pts, dtype=float))

    @classmethod
    def of_points(cls, points) -> "Selection":
        pts = np.asarray(points, dtype=float)
        return cls(tuple([0] * len(pts)), pts)

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Tree:
    edges: tuple[tuple[int, int], ...]
    length: float


def edge_length(sel: Selection, i: int, j: int) -> float:
    return dist(sel.points[i], sel.points[j])


def tree_from_edges(sel: Selection, edges) -> Tree:
    edges = tuple(sorted((min(i, j), max(i, j)) for i, j in edges))
    return Tree(edges, math.fsum(edge_length(sel, i, j) for i, j in edges))


def is_spanning_tree(edges, n: int) -> bool:
    """Union-find check: n-1 edges, no self loops, no cycles."""
    if len(edges) != n - 1:
        return False
    parent = list(range(n))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for i, j in edges:
        if i == j or not (0 <= i < n and 0 <= j < n):
            return False
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
    return True


def max_spanning_tree(sel: Selection) -> Tree:
    """Maximum-weight spanning tree of the complete graph on ``sel.points``.

    Prim's algorithm in O(n^2).  Among equal-weight candidate edges the
    lexicographically smallest (min, max) index pair wins.
    """
    n = sel.n
    if n < 2:
        raise ValueError("need at least two points")
    W = pairwise_dist(sel.points, sel.points)
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    key = W[0].copy()
    parent = np.zeros(n, dtype=int)
    edges = []
    for _ in range(n - 1):
        best_v, best = -1, None
        for v in range(n):
            if in_tree[v]:
                continue
            cand = (-key[v], min(parent[v], v), max(parent[v], v))
            if best is None or cand < best:
                best_v, best = v, cand
        v = best_v
        in_tree[v] = True
        edges.append((int(parent[v]), v))
        for u in range(n):
            if in_tree[u]:
                continue
            w = W[v, u]
            if w > key[u] or (w == key[u] and (min(v, u), max(v, u)) < (min(parent[u], u), max(parent[u], u))):
                key[u] = w
                parent[u] = v
    return tree_from_edges(sel, edges)


def star(sel: Selection, center: int) -> Tree:
    """Star centered at region ``center``."""
    if not 0 <= center < sel.n:
        raise ValueError(f"center {center} out of range")
    return tree_from_edges(sel, [(center, i) for i in range(sel.n) if i != center])


def two_star(sel: Selection, p: int, q: int, assignment: Mapping[int, int]) -> Tree:
    """Edge pq plus an edge from every other region to its assigned hub (p or q)."""
    if p == q:
        raise ValueError("2-star hubs must differ")
    edges = [(p, q)]
    for i in range(sel.n):
        if i in (p, q):
            continue
        hub = assignment[i]
        if hub not in (p, q):
            raise ValueError(f"region {i} assigned to {hub}, not a hub")
        edges.append((hub, i))
    return tree_from_edges(sel, edges)


A1_STAR_A = "A1_STAR_A"
A1_STAR_B = "A1_STAR_B"
A2_T1 = "A2_T1"
A2_T2 = "A2_T2"
EXACT = "EXACT"
PRODUCERS = (A1_STAR_A, A1_STAR_B, A2_T1, A2_T2, EXACT)


@dataclass(frozen=True)
class Solution:
    """A selection, a spanning tree on it, and the algorithm that built it."""

    selection: Selection
    tree: Tree
    producer: str

    @property
    def length(self) -> float:
        return self.tree.length

    def to_dict(self) -> dict:
        return {
            "producer": self.producer,
            "length": self.length,
            "selection": list(self.selection.indices),
            "points": [[float(c) for c in p] for p in self.selection.points],
            "edges": [list(e) for e in self.tree.edges],
        }

    @classmethod
    def from_dict(cls, data: dict, inst=None) -> "Solution":
        if inst is not None:
            sel = Selection.from_instance(inst, data["selection"])
        else:
            sel = Selection(tuple(data["selection"]), np.array(data["points"], dtype=float))
        tree = tree_from_edges(sel, [tuple(e) for e in data["edges"]])
        producer = data.get("producer", EXACT)
        if producer not in PRODUCERS:
            raise ValueError(f"unknown producer {producer!r}")
        return cls(sel, tree, producer)
