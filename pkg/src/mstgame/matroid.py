"""Graphic matroids on multigraphs and minimum-cost common bases.

The intersection routine grows a common independent set one element at a
time along a shortest augmenting path of the exchange graph, where elements
entering cost ``+c`` and elements leaving cost ``-c``, and ties are broken
by path length (in arcs) and then by element index.  Each intermediate set
is then of minimum cost among common independent sets of its size, so the
final set, if it has full rank in both matroids, is a minimum-cost common
basis.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Optional, Sequence

from .mst import UnionFind


class GraphicMatroid:
    """Cycle matroid of a multigraph whose ground set is ``range(len(ends))``;
    element ``e`` is an edge with endpoints ``ends[e]``."""

    def __init__(self, vertices: Sequence[Hashable],
                 ends: Sequence[tuple[Hashable, Hashable]]):
        self.vertices = tuple(vertices)
        self.ends = tuple(tuple(e) for e in ends)
        known = set(self.vertices)
        for a, b in self.ends:
            if a not in known or b not in known:
                raise ValueError(f"edge ({a}, {b}) has an unknown endpoint")

    def __len__(self) -> int:
        return len(self.ends)

    def is_independent(self, elements) -> bool:
        uf = UnionFind(self.vertices)
        return all(uf.union(*self.ends[e]) for e in elements)

    def rank(self, elements=None) -> int:
        if elements is None:
            elements = range(len(self.ends))
        uf = UnionFind(self.vertices)
        return sum(1 for e in elements if uf.union(*self.ends[e]))

    def is_basis(self, elements) -> bool:
        elements = list(elements)
        return self.is_independent(elements) and len(elements) == self.rank()

    def circuits(self, independent) -> dict[int, Optional[list[int]]]:
        """For each element outside ``independent``: None if it can be added,
        else the elements of ``independent`` on its fundamental circuit."""
        independent = set(independent)
        adj: dict = {x: [] for x in self.vertices}
        for e in sorted(independent):
            a, b = self.ends[e]
            adj[a].append((b, e))
            adj[b].append((a, e))
        # root every tree of the forest; parent edge + depth per vertex
        up: dict = {}
        depth: dict = {}
        comp: dict = {}
        for s in self.vertices:
            if s in comp:
                continue
            comp[s], up[s], depth[s] = s, None, 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y, e in adj[x]:
                    if y not in comp:
                        comp[y], up[y], depth[y] = s, (x, e), depth[x] + 1
                        queue.append(y)
        out: dict[int, Optional[list[int]]] = {}
        for f in range(len(self.ends)):
            if f in independent:
                continue
            a, b = self.ends[f]
            if comp[a] != comp[b]:
                out[f] = None
                continue
            path = []
            while a != b:
                if depth[a] < depth[b]:
                    a, b = b, a
                x, e = up[a]
                path.append(e)
                a = x
            out[f] = path
        return out


def _augment(m1: GraphicMatroid, m2: GraphicMatroid, costs, current: set):
    """Shortest augmenting path as a list of elements, or None."""
    n = len(m1)
    c1 = m1.circuits(current)
    c2 = m2.circuits(current)
    arcs: list[list[int]] = [[] for _ in range(n)]
    for y, circ in c1.items():
        if circ is not None:
            for x in circ:
                arcs[x].append(y)       # current - x + y independent in M1
    for y, circ in c2.items():
        if circ is not None:
            arcs[y].extend(circ)        # current - x + y independent in M2
    for a in arcs:
        a.sort()

    def length(e):
        return -costs[e] if e in current else costs[e]

    dist: dict[int, tuple] = {}
    prev: dict[int, Optional[int]] = {}
    queue = deque()
    for y in sorted(c1):
        if c1[y] is None:
            dist[y] = (costs[y], 0)
            prev[y] = None
            queue.append(y)
    queued = set(queue)
    # label-correcting search; no negative cycles by extremality
    while queue:
        x = queue.popleft()
        queued.discard(x)
        dc, dh = dist[x]
        for y in arcs[x]:
            cand = (dc + length(y), dh + 1)
            if y not in dist or cand < dist[y]:
                dist[y] = cand
                prev[y] = x
                if y not in queued:
                    queue.append(y)
                    queued.add(y)
    sinks = [y for y in c2 if c2[y] is None and y in dist]
    if not sinks:
        return None
    end = min(sinks, key=lambda y: (dist[y], y))
    path = [end]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def max_common_independent(m1: GraphicMatroid, m2: GraphicMatroid,
                           costs: Sequence) -> list[int]:
    """A maximum-size common independent set of minimum cost."""
    if len(m1) != len(m2) or len(costs) != len(m1):
        raise ValueError("matroids and costs must share one ground set")
    current: set[int] = set()
    while True:
        path = _augment(m1, m2, costs, current)
        if path is None:
            return sorted(current)
        current.symmetric_difference_update(path)


def min_cost_common_basis(m1: GraphicMatroid, m2: GraphicMatroid,
                          costs: Sequence) -> Optional[list[int]]:
    best = max_common_independent(m1, m2, costs)
    if len(best) == m1.rank() == m2.rank():
        return best
    return None
