"""Rooted complete graphs with exact edge weights, and the threshold graphs
and neighborhoods derived from them.

Vertices are dense indices ``0..n-1``; external names live only in
:attr:`GameInstance.names` and are used by the I/O layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterable, Mapping, Optional, Sequence, Union

Weight = Union[int, Fraction]
Edge = tuple[int, int]


class InstanceError(ValueError):
    """Raised when an instance violates the completeness/exactness rules."""


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def normalize_weight(value) -> Weight:
    """Coerce ``value`` to an exact int or Fraction; floats are refused."""
    if isinstance(value, bool):
        raise InstanceError(f"weight {value!r} is not a number")
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        q = Fraction(value)
        return q.numerator if q.denominator == 1 else q
    raise InstanceError(
        f"weight {value!r} is not exact; use an int or a Fraction")


class GameInstance:
    """An edge-weighted complete graph ``G = (V, E)`` with a root.

    ``weights`` maps every unordered pair of distinct vertices to its weight.
    Keys may be given in either orientation, but each pair exactly once.
    """

    __slots__ = ("n", "root", "names", "_w", "levels", "_level_of",
                 "sorted_edges")

    def __init__(self, n: int, root: int, weights: Mapping[Edge, Weight],
                 names: Optional[Sequence[str]] = None):
        if n < 2:
            raise InstanceError(f"need at least 2 vertices, got {n}")
        if not 0 <= root < n:
            raise InstanceError(f"root {root} is not a vertex")
        if names is None:
            names = tuple(str(i) for i in range(n))
        names = tuple(names)
        if len(names) != n or len(set(names)) != n:
            raise InstanceError("vertex names must be distinct, one per vertex")

        w: list[list[Optional[Weight]]] = [[None] * n for _ in range(n)]
        for (u, v), value in weights.items():
            if u == v:
                raise InstanceError(f"self-loop weight on vertex {names[u]}")
            if not (0 <= u < n and 0 <= v < n):
                raise InstanceError(f"pair ({u}, {v}) is out of range")
            if w[u][v] is not None:
                raise InstanceError(
                    f"duplicate weight for pair ({names[u]}, {names[v]})")
            x = normalize_weight(value)
            w[u][v] = w[v][u] = x
        for u, v in combinations(range(n), 2):
            if w[u][v] is None:
                raise InstanceError(
                    f"missing weight for pair ({names[u]}, {names[v]})")

        self.n = n
        self.root = root
        self.names = names
        self._w = tuple(tuple(row) for row in w)
        self.levels: tuple[Weight, ...] = tuple(
            sorted({w[u][v] for u, v in combinations(range(n), 2)}))
        self._level_of = {x: i + 1 for i, x in enumerate(self.levels)}
        self.sorted_edges: tuple[Edge, ...] = tuple(sorted(
            combinations(range(n), 2), key=lambda e: (w[e[0]][e[1]], e)))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence], root: int = 0,
                    names: Optional[Sequence[str]] = None) -> "GameInstance":
        """Build from a symmetric matrix; the diagonal is ignored."""
        n = len(matrix)
        weights = {}
        for u, v in combinations(range(n), 2):
            if matrix[u][v] != matrix[v][u]:
                raise InstanceError(f"matrix is not symmetric at ({u}, {v})")
            weights[(u, v)] = matrix[u][v]
        return cls(n, root, weights, names)

    @classmethod
    def from_named(cls, root: str, weights: Mapping[tuple[str, str], Weight],
                   vertices: Optional[Sequence[str]] = None) -> "GameInstance":
        """Build from name-keyed weights.

        Without an explicit vertex order the root comes first, followed by
        the other names in order of first appearance.
        """
        if vertices is None:
            order = [root]
            for pair in weights:
                for x in pair:
                    if x not in order:
                        order.append(x)
            vertices = order
        index = {x: i for i, x in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InstanceError("duplicate vertex names")
        if root not in index:
            raise InstanceError(f"root {root!r} is not a vertex")
        resolved = {}
        for (a, b), value in weights.items():
            for x in (a, b):
                if x not in index:
                    raise InstanceError(f"unknown vertex {x!r}")
            resolved[(index[a], index[b])] = value
        return cls(len(vertices), index[root], resolved, vertices)

    @property
    def k(self) -> int:
        return len(self.levels)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def players(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.n) if x != self.root)

    def w(self, u: int, v: int) -> Weight:
        x = self._w[u][v]
        if x is None:
            raise ValueError(f"no edge between {u} and itself")
        return x

    def level_weight(self, i: int) -> Weight:
        self._check_level(i)
        return self.levels[i - 1]

    def level_of(self, u: int, v: int) -> int:
        """The index ``i`` with ``w(uv) = w_i``."""
        return self._level_of[self.w(u, v)]

    def edges(self) -> Iterable[Edge]:
        return combinations(range(self.n), 2)

    def weight_items(self) -> list[tuple[int, int, Weight]]:
        return [(u, v, self._w[u][v]) for u, v in self.edges()]

    def relabel(self, perm: Sequence[int]) -> "GameInstance":
        """Vertex ``x`` becomes ``perm[x]``."""
        names = [""] * self.n
        for x in range(self.n):
            names[perm[x]] = self.names[x]
        weights = {(perm[u], perm[v]): x for u, v, x in self.weight_items()}
        return GameInstance(self.n, perm[self.root], weights, names)

    def map_weights(self, fn) -> "GameInstance":
        weights = {(u, v): fn(x) for u, v, x in self.weight_items()}
        return GameInstance(self.n, self.root, weights, self.names)

    def _check_level(self, i: int) -> None:
        if not 1 <= i <= self.k:
            raise ValueError(f"level index {i} outside [1, {self.k}]")

    def __eq__(self, other) -> bool:
        if not isinstance(other, GameInstance):
            return NotImplemented
        return (self.n, self.root, self.names, self._w) == (
            other.n, other.root, other.names, other._w)

    def __hash__(self) -> int:
        return hash((self.n, self.root, self.names, self._w))

    def __repr__(self) -> str:
        return (f"GameInstance(n={self.n}, root={self.names[self.root]!r}, "
                f"levels={list(map(str, self.levels))})")


@dataclass(frozen=True)
class ThresholdGraph:
    """``G_i``: the edges of weight at most ``w_i``."""

    level_index: int
    threshold: Weight
    adjacency: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n)
                for v in sorted(self.adjacency[u]) if u < v]


def threshold_graph(inst: GameInstance, i: int) -> ThresholdGraph:
    cap = inst.level_weight(i)
    adj = tuple(
        frozenset(y for y in range(inst.n) if y != x and inst.w(x, y) <= cap)
        for x in range(inst.n))
    return ThresholdGraph(i, cap, adj)


def _check_pair(u: int, v: int) -> None:
    if u == v:
        raise ValueError(f"endpoints must differ, got {u} twice")


def edge_neighborhood(inst: GameInstance, u: int, v: int,
                      i: int) -> frozenset[int]:
    """``N_i(uv)``: vertices joined to both u and v by edges of weight <= w_i."""
    _check_pair(u, v)
    cap = inst.level_weight(i)
    return frozenset(x for x in range(inst.n) if x != u and x != v
                     and inst.w(x, u) <= cap and inst.w(x, v) <= cap)


def expensive_neighborhood(inst: GameInstance, u: int,
                           v: int) -> frozenset[int]:
    _check_pair(u, v)
    base = inst.w(u, v)
    return frozenset(x for x in range(inst.n) if x != u and x != v
                     and max(inst.w(x, u), inst.w(x, v)) > base)


def candidate_edges(inst: GameInstance) -> list[Edge]:
    """Edges ``uv`` whose expensive neighborhood contains the root.

    Root-incident edges never qualify, so only player pairs are scanned.
    """
    r = inst.root
    out = []
    for u, v in inst.edges():
        if r in (u, v):
            continue
        if max(inst.w(r, u), inst.w(r, v)) > inst.w(u, v):
            out.append((u, v))
    return out


def in_suv(inst: GameInstance, u: int, v: int, S: Iterable[int]) -> bool:
    """Membership of ``S`` in the family of root-containing sets avoiding u, v."""
    S = frozenset(S)
    return inst.root in S and u not in S and v not in S and all(
        0 <= x < inst.n for x in S)
