"""Minimum-cost S-wide spanning trees and the two necessary conditions for
submodularity that they decide.

A spanning tree is S-wide when every component left after deleting the
root holds at most one terminal.  With k >= 2 terminals the problem becomes
a minimum-cost common basis of two graphic matroids on an auxiliary
multigraph: the root is copied k - 1 times (copies inherit its edges), then
either all root copies or all terminals are identified into one vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .instance import GameInstance, Weight, edge_key
from .matroid import GraphicMatroid, min_cost_common_basis
from .mst import SpanningTree, UnionFind, mst_weight


@dataclass(frozen=True)
class SWideInstance:
    """Graph ``H = (W, F)`` on vertices ``0..n-1`` with exact edge costs."""

    n: int
    edges: tuple[tuple[int, int], ...]
    costs: tuple[Weight, ...]
    root: int
    terminals: tuple[int, ...]

    @classmethod
    def build(cls, n: int, edges, root: int, terminals: Sequence[int]):
        """``edges`` maps pairs to costs (or is an iterable of triples).

        Edges joining two terminals are dropped: no S-wide tree uses them.
        """
        items = edges.items() if hasattr(edges, "items") else (
            ((a, b), c) for a, b, c in edges)
        terminals = tuple(terminals)
        if not terminals:
            raise ValueError("need at least one terminal")
        if len(set(terminals)) != len(terminals):
            raise ValueError("terminals must be distinct")
        if root in terminals:
            raise ValueError("the root cannot be a terminal")
        for x in (root, *terminals):
            if not 0 <= x < n:
                raise ValueError(f"vertex {x} out of range")
        tset = set(terminals)
        seen = {}
        for (a, b), c in items:
            if a == b or not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"bad edge ({a}, {b})")
            key = edge_key(a, b)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            if a in tset and b in tset:
                continue
            seen[key] = c
        keys = tuple(sorted(seen))
        return cls(n, keys, tuple(seen[e] for e in keys), root, terminals)

    @property
    def k(self) -> int:
        return len(self.terminals)


@dataclass(frozen=True)
class AuxiliaryGraphs:
    """``H'`` and its two quotients, sharing the ground set ``F'``.

    Vertices ``0..n-1`` are those of H and root copies are ``n, n+1, ...``.
    In the first quotient the copies merge back into the root; in the
    second all terminals merge into ``terminals[0]``.  ``edge_origin`` maps
    each element of ``F'`` to the index of the H edge it came from.
    """

    vertices: tuple[int, ...]
    ends: tuple[tuple[int, int], ...]
    roots_merged: tuple[tuple[int, ...], tuple[tuple[int, int], ...]]
    terminals_merged: tuple[tuple[int, ...], tuple[tuple[int, int], ...]]
    edge_origin: tuple[int, ...]
    costs: tuple[Weight, ...]
    root_copies: tuple[int, ...]

    def matroids(self) -> tuple[GraphicMatroid, GraphicMatroid]:
        return (GraphicMatroid(*self.roots_merged),
                GraphicMatroid(*self.terminals_merged))


def build_auxiliary(inst: SWideInstance) -> AuxiliaryGraphs:
    if inst.k < 2:
        raise ValueError("the auxiliary construction needs at least 2 terminals")
    r1 = inst.root
    copies = tuple(range(inst.n, inst.n + inst.k - 1))
    ends = list(inst.edges)
    origin = list(range(len(inst.edges)))
    for copy in copies:
        for idx, (a, b) in enumerate(inst.edges):
            if r1 in (a, b):
                ends.append((copy, b if a == r1 else a))
                origin.append(idx)
    s = inst.terminals[0]
    tset = set(inst.terminals)
    vertices = tuple(range(inst.n)) + copies

    def quotient(rep, merged):
        return (tuple(x for x in vertices if x == rep or x not in merged),
                tuple((rep if a in merged else a, rep if b in merged else b)
                      for a, b in ends))

    return AuxiliaryGraphs(
        vertices=vertices,
        ends=tuple(ends),
        roots_merged=quotient(r1, set(copies) | {r1}),
        terminals_merged=quotient(s, tset),
        edge_origin=tuple(origin),
        costs=tuple(inst.costs[j] for j in origin),
        root_copies=copies,
    )


def _plain_mst(inst: SWideInstance) -> Optional[SpanningTree]:
    order = sorted(range(len(inst.edges)),
                   key=lambda j: (inst.costs[j], inst.edges[j]))
    uf = UnionFind(range(inst.n))
    chosen = [j for j in order if uf.union(*inst.edges[j])]
    if len(chosen) != inst.n - 1:
        return None
    return _tree(inst, chosen)


def _tree(inst: SWideInstance, indices) -> SpanningTree:
    return SpanningTree(frozenset(range(inst.n)),
                        tuple(sorted(inst.edges[j] for j in indices)),
                        sum((inst.costs[j] for j in indices), 0))


def is_swide(tree: SpanningTree, root, terminals) -> bool:
    """Every component of ``tree`` minus ``root`` holds at most one terminal."""
    verts = tree.vertex_set
    if root not in verts or any(t not in verts for t in terminals):
        raise ValueError("root and terminals must be vertices of the tree")
    uf = UnionFind(verts)
    if len(tree.edges) != len(verts) - 1 or not all(
            uf.union(a, b) for a, b in tree.edges):
        raise ValueError("not a spanning tree of its vertex set")
    uf = UnionFind(verts)
    for a, b in tree.edges:
        if root not in (a, b):
            uf.union(a, b)
    classes = [uf.find(t) for t in terminals]
    return len(set(classes)) == len(classes)


def min_swide_tree(inst: SWideInstance) -> Optional[SpanningTree]:
    if inst.k == 1:
        return _plain_mst(inst)
    aux = build_auxiliary(inst)
    m1, m2 = aux.matroids()
    basis = min_cost_common_basis(m1, m2, aux.costs)
    # full rank in both is not enough when H itself is disconnected
    if basis is None or len(basis) != inst.n - 1:
        return None
    origins = [aux.edge_origin[e] for e in basis]
    if len(set(origins)) != len(origins):
        raise AssertionError("common basis maps two edges onto one")
    tree = _tree(inst, origins)
    if not is_swide(tree, inst.root, inst.terminals):
        raise AssertionError("common basis did not map to an S-wide tree")
    return tree


# --- necessary conditions on game instances -------------------------------

@dataclass(frozen=True)
class NecessaryViolation:
    """A minimum spanning tree violating condition ``"a"`` or ``"b"`` for
    the ordered player pair (u, v)."""

    condition: str
    u: int
    v: int
    tree: SpanningTree


def _game_swide(game: GameInstance, root: int, terminals) -> SWideInstance:
    return SWideInstance.build(
        game.n, {(a, b): c for a, b, c in game.weight_items()}, root, terminals)


def theorem12_a_violations(game: GameInstance) -> Iterator[NecessaryViolation]:
    """Minimum spanning trees with a player u on the root-v path although
    ``w(rv) < w(ru)``, one per ordered pair that admits one."""
    r = game.root
    target = mst_weight(game, range(game.n))
    for u in game.players:
        for v in game.players:
            if u == v or not game.w(r, v) < game.w(r, u):
                continue
            tree = min_swide_tree(_game_swide(game, u, (v, r)))
            if tree is not None and tree.total_weight == target:
                yield NecessaryViolation("a", u, v, tree)


def theorem12_b_violations(game: GameInstance) -> Iterator[NecessaryViolation]:
    """Minimum spanning trees in which adding uv, with ``w(uv) < w(rv)``,
    closes a cycle through the root."""
    r = game.root
    target = mst_weight(game, range(game.n))
    for u in game.players:
        for v in game.players:
            if u == v or not game.w(u, v) < game.w(r, v):
                continue
            tree = min_swide_tree(_game_swide(game, r, (u, v)))
            if tree is not None and tree.total_weight == target:
                yield NecessaryViolation("b", u, v, tree)


def check_theorem12_a(game: GameInstance) -> Optional[NecessaryViolation]:
    return next(theorem12_a_violations(game), None)


def check_theorem12_b(game: GameInstance) -> Optional[NecessaryViolation]:
    return next(theorem12_b_violations(game), None)
