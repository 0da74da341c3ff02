"""Independent brute-force oracles used as ground truth in tests.

Nothing here shares code with the package.  Trees come from Pruefer
sequences.  Distances are the plain sum of squared differences in coordinate
order followed by one square root; that is the float recipe the package
promises, so weights compare with ==.  (math.dist rounds differently in the
last place.)
"""
import heapq
import itertools
import math


def pruefer_to_edges(seq, n):
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def all_labeled_trees(n):
    """Every labeled spanning tree on n nodes (n^(n-2) of them)."""
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield pruefer_to_edges(seq, n)


def euclid(p, q):
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(p, q)))


def brute_max_tree_weight(points):
    best = -1.0
    for edges in all_labeled_trees(len(points)):
        w = math.fsum(euclid(points[i], points[j]) for i, j in edges)
        best = max(best, w)
    return best


def brute_exact(regions):
    """Max over all vertex selections of the max spanning tree (Pruefer enumeration)."""
    best = -1.0
    for sel in itertools.product(*regions):
        best = max(best, brute_max_tree_weight(list(sel)))
    return best


def brute_pairs(regions, same):
    """Max distance over vertex pairs in the same (same=True) or distinct regions."""
    best = 0.0
    for i, ri in enumerate(regions):
        for j, rj in enumerate(regions):
            if (i == j) != same:
                continue
            for p in ri:
                for q in rj:
                    best = max(best, euclid(p, q))
    return best


def regions_of(inst):
    return [[tuple(float(c) for c in v) for v in r.vertices] for r in inst.regions]
