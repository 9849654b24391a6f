"""Weighted graphs, edge-list ingestion, and Kruskal minimum spanning forest."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class WeightedEdge:
    u: int
    v: int
    weight: float
    id: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"self loop on node {self.u}")
        if self.weight < 0:
            raise ValueError(f"negative weight on edge {self.id}")


@dataclass
class WeightedGraph:
    n: int
    edges: list[WeightedEdge] = field(default_factory=list)

    def __post_init__(self):
        seen = set()
        for e in self.edges:
            if e.id in seen:
                raise ValueError(f"duplicate edge id {e.id}")
            seen.add(e.id)
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise ValueError(f"edge {e.id} endpoint outside 0..{self.n - 1}")


def parse_edge_list(text: str) -> WeightedGraph:
    """Parse `u v [weight]` lines; `#` starts a comment; node count inferred."""
    edges = []
    max_node = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 'u v [weight]', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
            weight = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise ValueError(f"line {lineno}: malformed numbers in {raw!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative node id")
        if u == v:
            raise ValueError(f"line {lineno}: self loop on node {u}")
        max_node = max(max_node, u, v)
        edges.append(WeightedEdge(u=u, v=v, weight=weight, id=len(edges)))
    return WeightedGraph(n=max_node + 1, edges=edges)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:  # path compression
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def mst(g: WeightedGraph) -> set[int]:
    """Kruskal spanning forest; weight ties broken by ascending edge id."""
    uf = _UnionFind(g.n)
    selected = set()
    for e in sorted(g.edges, key=lambda e: (e.weight, e.id)):
        if uf.union(e.u, e.v):
            selected.add(e.id)
    return selected


def component_count(g: WeightedGraph) -> int:
    uf = _UnionFind(g.n)
    for e in g.edges:
        uf.union(e.u, e.v)
    return len({uf.find(i) for i in range(g.n)})
