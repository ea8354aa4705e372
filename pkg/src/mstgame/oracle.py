"""Exponential ground truth: brute-force submodularity and exhaustive
violated-cycle enumeration.  Only for small instances.

Minimum spanning tree weights are recomputed here with Prim's algorithm on
vertex bitmasks, independently of :mod:`mstgame.mst`.
"""

from __future__ import annotations

from typing import Optional

from .instance import GameInstance, Weight
from .recognition import Verdict, ViolationTriple, canonical_cycle

DEFAULT_GUARD = 14
CYCLE_GUARD = 8


class GuardExceeded(ValueError):
    pass


def _guard(inst: GameInstance, guard: int) -> None:
    if inst.n > guard:
        raise GuardExceeded(
            f"instance has {inst.n} vertices; the oracle guard is {guard}")


def prim_weight(inst: GameInstance, mask: int) -> Weight:
    verts = [x for x in range(inst.n) if mask >> x & 1]
    if len(verts) <= 1:
        return 0
    start, rest = verts[0], verts[1:]
    best = {x: inst.w(start, x) for x in rest}
    total: Weight = 0
    while best:
        x = min(best, key=lambda y: (best[y], y))
        total += best.pop(x)
        for y in best:
            c = inst.w(x, y)
            if c < best[y]:
                best[y] = c
    return total


def mst_table(inst: GameInstance) -> dict[int, Weight]:
    """MST weight of ``G[S]`` for every bitmask ``S`` containing the root."""
    rbit = 1 << inst.root
    return {m: prim_weight(inst, m) for m in range(1 << inst.n) if m & rbit}


def brute_force_submodular(inst: GameInstance,
                           size_guard: int = DEFAULT_GUARD) -> Verdict:
    """Evaluate ``f_uv(S)`` on every admissible triple.

    Pairs are visited lexicographically and, for each pair, sets ``S`` by a
    binary counter over the remaining players; the first negative triple is
    returned.
    """
    _guard(inst, size_guard)
    table = mst_table(inst)
    r = inst.root
    players = inst.players
    for a, u in enumerate(players):
        for v in players[a + 1:]:
            rest = [x for x in players if x != u and x != v]
            ub, vb = 1 << u, 1 << v
            for counter in range(1 << len(rest)):
                S = 1 << r
                for j, x in enumerate(rest):
                    if counter >> j & 1:
                        S |= 1 << x
                value = (table[S | ub] + table[S | vb] - table[S]
                         - table[S | ub | vb])
                if value < 0:
                    members = frozenset(x for x in range(inst.n) if S >> x & 1)
                    return Verdict(False, violation=ViolationTriple(
                        u, v, members, value, route="oracle"))
    return Verdict(True)


def _is_violated(inst: GameInstance, cycle: list[int], cap) -> bool:
    m = len(cycle)
    r = inst.root
    if not any(x != r and inst.w(r, x) > cap for x in cycle):
        return False
    ew = [inst.w(cycle[j], cycle[(j + 1) % m]) for j in range(m)]
    nonadjacent = False
    for a in range(m):
        for b in range(a + 2, m):
            if a == 0 and b == m - 1:
                continue
            chord = inst.w(cycle[a], cycle[b])
            if chord > cap:
                nonadjacent = True
            if chord < max(ew[a:b]) and chord < max(ew[b:] + ew[:a]):
                return False
    return nonadjacent


def enumerate_violated_cycles(inst: GameInstance, i: int,
                              size_guard: int = CYCLE_GUARD) -> list[tuple[int, ...]]:
    """All violated cycles of ``G_i`` (``i < k``), one per rotation/reflection
    class, in canonical form."""
    if not 1 <= i < inst.k:
        raise ValueError(f"level must satisfy 1 <= i < k = {inst.k}")
    _guard(inst, size_guard)
    cap = inst.levels[i - 1]
    n = inst.n
    adj = [[y for y in range(n) if y != x and inst.w(x, y) <= cap]
           for x in range(n)]
    found: list[tuple[int, ...]] = []

    def extend(path: list[int], on_path: set[int]) -> None:
        start, last = path[0], path[-1]
        for y in adj[last]:
            if y == start and len(path) >= 3 and path[1] < path[-1]:
                if _is_violated(inst, path, cap):
                    found.append(tuple(path))
            elif y > start and y not in on_path:
                path.append(y)
                on_path.add(y)
                extend(path, on_path)
                on_path.discard(y)
                path.pop()

    for s in range(n):
        extend([s], {s})
    return sorted(canonical_cycle(c) for c in found)


def has_violated_cycle(inst: GameInstance,
                       size_guard: int = CYCLE_GUARD) -> Optional[tuple[int, tuple]]:
    for i in range(1, inst.k):
        cycles = enumerate_violated_cycles(inst, i, size_guard)
        if cycles:
            return i, cycles[0]
    return None
