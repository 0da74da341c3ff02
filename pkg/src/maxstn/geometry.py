"""Euclidean primitives: distances, diameters and farthest vertices.

Every distance in the package goes through :func:`dist` or
:func:`pairwise_dist`.  Both accumulate squared coordinate differences in the
same sequential order, so a scalar distance and the matching matrix entry are
bit-identical.  That keeps exact-equality checks (tree weights, diameter
scans) meaningful.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

import numpy as np

if TYPE_CHECKING:
    from .instance import Instance


@dataclass(frozen=True)
class DiameterPair:
    region_a: int
    vertex_a: int
    region_b: int
    vertex_b: int
    length: float


def dist(p: Sequence[float], q: Sequence[float]) -> float:
    """Euclidean distance between two points of equal dimension."""
    if len(p) != len(q):
        raise ValueError(f"dimension mismatch: {len(p)} != {len(q)}")
    acc = 0.0
    for a, b in zip(p, q):
        d = float(a) - float(b)
        acc += d * d
    return math.sqrt(acc)


def pairwise_dist(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Distance matrix between the rows of ``P`` (m, d) and ``Q`` (k, d)."""
    P = np.asarray(P, dtype=float)
    Q = np.asarray(Q, dtype=float)
    if P.shape[1] != Q.shape[1]:
        raise ValueError(f"dimension mismatch: {P.shape[1]} != {Q.shape[1]}")
    acc = np.zeros((P.shape[0], Q.shape[0]))
    for k in range(P.shape[1]):
        diff = P[:, k, None] - Q[None, :, k]
        acc += diff * diff
    return np.sqrt(acc)


def _stacked(inst: Instance) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All vertices as one array plus their region and local vertex ids."""
    pts = np.concatenate([r.vertices for r in inst.regions], axis=0)
    region = np.concatenate(
        [np.full(len(r.vertices), i) for i, r in enumerate(inst.regions)]
    )
    local = np.concatenate([np.arange(len(r.vertices)) for r in inst.regions])
    return pts, region, local


def vertex_distance_matrix(inst: Instance) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Full N x N vertex distance matrix with region and local-index labels.

    Rows are ordered region by region, vertex by vertex, which is also the
    lexicographic (region, vertex) order used for tie-breaking.
    """
    pts, region, local = _stacked(inst)
    return pairwise_dist(pts, pts), region, local


def _first_max(values: np.ndarray, mask: np.ndarray) -> tuple[int, int] | None:
    # np.argmax returns the first maximum in row-major order, which is the
    # lexicographic (row, col) minimum among ties.
    if not mask.any():
        return None
    masked = np.where(mask, values, -np.inf)
    flat = int(np.argmax(masked))
    return divmod(flat, values.shape[1])


def bichromatic_diameter(inst: Instance) -> DiameterPair:
    """Farthest pair of vertices taken from two distinct regions.

    Exhaustive O(N^2) scan.  Ties go to the lexicographically smallest
    (region_a, vertex_a, region_b, vertex_b) with region_a < region_b.
    """
    if inst.n < 2:
        raise ValueError("bichromatic diameter needs at least two regions")
    D, region, local = vertex_distance_matrix(inst)
    mask = region[:, None] < region[None, :]
    i, j = _first_max(D, mask)
    return DiameterPair(int(region[i]), int(local[i]), int(region[j]), int(local[j]), float(D[i, j]))


def monochromatic_diameter(inst: Instance) -> DiameterPair:
    """Farthest pair of vertices inside a single region.

    Returns a zero-length pair on the first region when every region is a
    singleton.
    """
    if inst.n < 1:
        raise ValueError("empty instance")
    D, region, local = vertex_distance_matrix(inst)
    same = region[:, None] == region[None, :]
    mask = same & (local[:, None] < local[None, :])
    hit = _first_max(D, mask)
    if hit is None:
        return DiameterPair(0, 0, 0, 0, 0.0)
    i, j = hit
    return DiameterPair(int(region[i]), int(local[i]), int(region[j]), int(local[j]), float(D[i, j]))


def farthest_vertex_from(p: Sequence[float], vertices: np.ndarray) -> tuple[int, float]:
    """Index and distance of the vertex farthest from ``p`` (ties: smallest index)."""
    vertices = np.asarray(vertices, dtype=float)
    if len(vertices) == 0:
        raise ValueError("empty region")
    d = pairwise_dist(np.asarray(p, dtype=float)[None, :], vertices)[0]
    k = int(np.argmax(d))
    return k, float(d[k])
