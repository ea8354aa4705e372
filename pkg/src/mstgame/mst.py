"""Deterministic minimum spanning trees of induced subgraphs and the
submodularity defect of the spanning tree game."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .instance import Edge, GameInstance, Weight, edge_key


class UnionFind:
    def __init__(self, items: Iterable = ()):
        self.parent = {x: x for x in items}

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> bool:
        """Merge the classes of a and b; False if already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class SpanningTree:
    vertex_set: frozenset
    edges: tuple[Edge, ...]
    total_weight: Weight

    def neighbors(self, v) -> list:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    @property
    def tree_adjacency(self) -> dict:
        adj = {x: [] for x in sorted(self.vertex_set)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {x: sorted(ys) for x, ys in adj.items()}

    def path(self, a, b) -> list:
        """Vertices of the unique a-b path, a first."""
        adj = self.tree_adjacency
        prev = {a: None}
        stack = [a]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in prev:
                    prev[y] = x
                    stack.append(y)
        if b not in prev:
            raise ValueError(f"{a} and {b} are not connected")
        out = [b]
        while out[-1] != a:
            out.append(prev[out[-1]])
        return out[::-1]


def _vertex_set(inst: GameInstance, S) -> frozenset[int]:
    S = frozenset(S)
    if not S:
        raise ValueError("vertex set must be nonempty")
    bad = [x for x in S if not (isinstance(x, int) and 0 <= x < inst.n)]
    if bad:
        raise ValueError(f"not vertices of the instance: {sorted(bad)}")
    return S


def greedy_tree(inst: GameInstance, S, forced: Iterable[Edge] = ()) -> SpanningTree:
    """Kruskal on ``G[S]`` in the instance's fixed (weight, u, v) order,
    starting from the edges in ``forced``.

    ``forced`` must be an acyclic edge set inside ``S``; the result is the
    cheapest spanning tree of ``G[S]`` containing it.
    """
    S = _vertex_set(inst, S)
    uf = UnionFind(S)
    chosen: list[Edge] = []
    total: Weight = 0
    for u, v in forced:
        if u not in S or v not in S:
            raise ValueError(f"forced edge ({u}, {v}) leaves the vertex set")
        if not uf.union(u, v):
            raise ValueError("forced edges contain a cycle")
        chosen.append(edge_key(u, v))
        total += inst.w(u, v)
    need = len(S) - 1
    if len(chosen) < need:
        for u, v in inst.sorted_edges:
            if u in S and v in S and uf.union(u, v):
                chosen.append((u, v))
                total += inst.w(u, v)
                if len(chosen) == need:
                    break
    return SpanningTree(S, tuple(sorted(chosen)), total)


def mst(inst: GameInstance, S) -> SpanningTree:
    return greedy_tree(inst, S)


def mst_weight(inst: GameInstance, S) -> Weight:
    return greedy_tree(inst, S).total_weight


def characteristic(inst: GameInstance, coalition) -> Weight:
    """Cost of connecting the players in ``coalition`` to the root."""
    coalition = frozenset(coalition)
    if inst.root in coalition:
        raise ValueError("coalitions are sets of players; the root is implicit")
    return mst_weight(inst, coalition | {inst.root})


def f_uv(inst: GameInstance, u: int, v: int, S) -> Weight:
    """``mst(S+u) + mst(S+v) - mst(S) - mst(S+u+v)``.

    Requires players ``u != v`` and ``S`` containing the root but neither u
    nor v.  The game is submodular iff this is nonnegative everywhere.
    """
    S = frozenset(S)
    r = inst.root
    if u == v or r in (u, v):
        raise ValueError(f"u, v must be distinct players, got {u}, {v}")
    if r not in S:
        raise ValueError("S must contain the root")
    if u in S or v in S:
        raise ValueError("S must not contain u or v")
    return (mst_weight(inst, S | {u}) + mst_weight(inst, S | {v})
            - mst_weight(inst, S) - mst_weight(inst, S | {u, v}))
