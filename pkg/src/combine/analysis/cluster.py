"""Agglomerative hierarchical clustering with deterministic tie-breaking.

Leaves are 0..n-1, internal clusters n..2n-2 in merge order. When several
pairs share the minimum distance the smallest (a, b) cluster-id pair wins,
which makes results reproducible across runs and edge orderings.
"""

from __future__ import annotations

from dataclasses import dataclass

from combine.analysis.fingerprint import DistanceMatrix

LINKAGES = ("single", "complete", "average")


@dataclass(frozen=True)
class Merge:
    a: int
    b: int
    height: float
    cluster: int


@dataclass(frozen=True)
class Dendrogram:
    n_leaves: int
    merges: tuple[Merge, ...]

    def __post_init__(self):
        if self.n_leaves >= 1 and len(self.merges) != self.n_leaves - 1:
            raise ValueError("a dendrogram over n leaves has exactly n-1 merges")

    def members(self, cluster: int) -> frozenset[int]:
        """Leaf set under a cluster id."""
        if cluster < self.n_leaves:
            return frozenset([cluster])
        merge = self.merges[cluster - self.n_leaves]
        return self.members(merge.a) | self.members(merge.b)


def hcluster(d: DistanceMatrix, linkage: str = "average") -> Dendrogram:
    """Agglomerate the distance matrix bottom-up under the given linkage."""
    if linkage not in LINKAGES:
        raise ValueError(f"unknown linkage {linkage!r}")
    n = d.n
    if n < 1:
        raise ValueError("need at least one item")

    active: dict[int, int] = {i: 1 for i in range(n)}  # cluster id -> size
    dist: dict[tuple[int, int], float] = {}
    for i in range(n):
        for j in range(i + 1, n):
            dist[(i, j)] = d.get(i, j)

    merges: list[Merge] = []
    next_id = n
    while len(active) > 1:
        best = min(dist.items(), key=lambda kv: (kv[1], kv[0]))
        (a, b), height = best
        size_a, size_b = active.pop(a), active.pop(b)
        for k in list(active):
            da = dist.pop(_key(a, k))
            db = dist.pop(_key(b, k))
            if linkage == "single":
                dk = min(da, db)
            elif linkage == "complete":
                dk = max(da, db)
            else:
                dk = (size_a * da + size_b * db) / (size_a + size_b)
            dist[_key(next_id, k)] = dk
        del dist[(a, b)]
        merges.append(Merge(a=a, b=b, height=height, cluster=next_id))
        active[next_id] = size_a + size_b
        next_id += 1

    return Dendrogram(n_leaves=n, merges=tuple(merges))


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)
