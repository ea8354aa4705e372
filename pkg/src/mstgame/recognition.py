"""Polynomial-time recognition of submodular spanning tree games.

A game is submodular iff

* no threshold graph ``G_i`` with ``i < k`` contains a bad hole or a bad
  induced diamond (both are found by direct search), and
* every candidate edge ``uv`` has ``f_uv(N^(uv)) >= 0``.

Every negative answer carries a :class:`ViolationTriple` whose value has been
recomputed from four minimum spanning trees.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .instance import (Edge, GameInstance, ThresholdGraph, Weight,
                       candidate_edges, expensive_neighborhood,
                       threshold_graph)
from .mst import f_uv

BAD_HOLE = "bad_hole"
BAD_DIAMOND = "bad_diamond"


class ExtractionError(RuntimeError):
    """No negative triple could be built from a witness (a bug, not input)."""


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at the smallest vertex, oriented toward the smaller
    of its two cycle neighbors."""
    cycle = list(cycle)
    m = cycle.index(min(cycle))
    rot = cycle[m:] + cycle[:m]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


@dataclass(frozen=True)
class CycleWitness:
    kind: str
    level: int
    vertices: tuple[int, ...]
    evidence: int
    tips: tuple[int, ...] = ()

    @property
    def non_tips(self) -> tuple[int, ...]:
        return tuple(x for x in self.vertices if x not in self.tips)


@dataclass(frozen=True)
class ViolationTriple:
    u: int
    v: int
    S: frozenset
    value: Weight
    # Witness the triple was built from, after any case reductions.
    source: Optional[CycleWitness] = field(default=None, compare=False)
    route: str = field(default="direct", compare=False)

    @classmethod
    def verified(cls, inst: GameInstance, u: int, v: int, S, **extra):
        u, v = min(u, v), max(u, v)
        S = frozenset(S)
        value = f_uv(inst, u, v, S)
        if not value < 0:
            raise ExtractionError(
                f"f_uv({u}, {v}, {sorted(S)}) = {value} is not negative")
        return cls(u, v, S, value, **extra)


@dataclass(frozen=True)
class Verdict:
    submodular: bool
    witness: Optional[CycleWitness] = None
    violation: Optional[ViolationTriple] = None
    failing_candidate: Optional[tuple[Edge, Weight]] = None


def _cycle_edges_ok(inst: GameInstance, cycle: Sequence[int], cap) -> bool:
    m = len(cycle)
    return all(inst.w(cycle[j], cycle[(j + 1) % m]) <= cap for j in range(m))


def is_well_covered(inst: GameInstance, cycle: Sequence[int], i: int) -> bool:
    """True iff every chord weighs at least as much as every edge on one of
    the two arcs it spans.

    Chords are taken in the complete graph; those heavier than ``w_i`` cover
    trivially, so this agrees with chords taken in ``G_i``.
    """
    cycle = list(cycle)
    m = len(cycle)
    if m < 3 or len(set(cycle)) != m:
        raise ValueError("a cycle needs at least 3 distinct vertices")
    cap = inst.level_weight(i)
    if not _cycle_edges_ok(inst, cycle, cap):
        raise ValueError(f"cycle {cycle} is not a cycle of G_{i}")
    ew = [inst.w(cycle[j], cycle[(j + 1) % m]) for j in range(m)]
    for a in range(m):
        for b in range(a + 2, m):
            if a == 0 and b == m - 1:
                continue
            chord = inst.w(cycle[a], cycle[b])
            # arc a..b uses edges a..b-1; the other arc the rest
            if chord >= max(ew[a:b]):
                continue
            if chord >= max(ew[b:] + ew[:a]):
                continue
            return False
    return True


def find_hole_through(graph: ThresholdGraph, v: int) -> Optional[tuple[int, ...]]:
    """A chordless cycle of length >= 4 through ``v`` in ``graph``, or None.

    ``v`` lies on a hole iff two non-adjacent neighbors a, b of v are joined
    by a path avoiding the rest of N[v]; a shortest such path is induced.
    """
    nbrs = sorted(graph.neighbors(v))
    closed = set(nbrs) | {v}
    for a, b in combinations(nbrs, 2):
        if graph.has_edge(a, b):
            continue
        allowed = (set(range(graph.n)) - closed) | {b}
        prev = {a: None}
        queue = deque([a])
        while queue and b not in prev:
            x = queue.popleft()
            for y in sorted(graph.neighbors(x)):
                if y in allowed and y not in prev:
                    prev[y] = x
                    queue.append(y)
        if b in prev:
            path = [b]
            while path[-1] != a:
                path.append(prev[path[-1]])
            return canonical_cycle([v] + path[::-1])
    return None


def _check_strict_level(inst: GameInstance, i: int) -> None:
    if not 1 <= i < inst.k:
        raise ValueError(
            f"bad structures live in G_i for 1 <= i < k = {inst.k}; got i = {i}")


def find_bad_hole(inst: GameInstance, i: int) -> Optional[CycleWitness]:
    _check_strict_level(inst, i)
    g = threshold_graph(inst, i)
    r = inst.root
    for v in inst.players:
        if g.has_edge(r, v):
            continue
        hole = find_hole_through(g, v)
        if hole is not None:
            return CycleWitness(BAD_HOLE, i, hole, v)
    return None


def _diamond(inst: GameInstance, quad: Sequence[int], i: int) -> Optional[CycleWitness]:
    """The bad-diamond witness on ``quad`` at level i, if it is one."""
    cap = inst.level_weight(i)
    missing = [(a, b) for a, b in combinations(quad, 2) if inst.w(a, b) > cap]
    if len(missing) != 1:
        return None
    s, t = missing[0]
    u, v = [x for x in quad if x not in (s, t)]
    cycle = canonical_cycle([s, u, t, v])
    if not is_well_covered(inst, cycle, i):
        return None
    r = inst.root
    for tip in (s, t):
        if tip != r and inst.w(r, tip) > cap:
            return CycleWitness(BAD_DIAMOND, i, cycle, tip, (s, t))
    return None


def find_bad_diamond(inst: GameInstance, i: int) -> Optional[CycleWitness]:
    _check_strict_level(inst, i)
    for quad in combinations(range(inst.n), 4):
        found = _diamond(inst, quad, i)
        if found is not None:
            return found
    return None


def check_condition_i(inst: GameInstance) -> Optional[CycleWitness]:
    """First bad hole or bad induced diamond, scanning levels upward and
    holes before diamonds within a level."""
    for i in range(1, inst.k):
        found = find_bad_hole(inst, i) or find_bad_diamond(inst, i)
        if found is not None:
            return found
    return None


def check_condition_ii(inst: GameInstance) -> Optional[tuple[Edge, Weight]]:
    for u, v in candidate_edges(inst):
        value = f_uv(inst, u, v, expensive_neighborhood(inst, u, v))
        if value < 0:
            return (u, v), value
    return None


def validate_witness(inst: GameInstance, wit: CycleWitness) -> bool:
    """Re-check a witness against the definitions."""
    if not 1 <= wit.level < inst.k:
        return False
    cap = inst.level_weight(wit.level)
    cyc, r = wit.vertices, inst.root
    if len(set(cyc)) != len(cyc) or wit.evidence not in cyc or wit.evidence == r:
        return False
    if inst.w(r, wit.evidence) <= cap or not _cycle_edges_ok(inst, cyc, cap):
        return False
    if wit.kind == BAD_HOLE:
        m = len(cyc)
        chords = [(cyc[a], cyc[b]) for a in range(m) for b in range(a + 2, m)
                  if not (a == 0 and b == m - 1)]
        return m >= 4 and all(inst.w(a, b) > cap for a, b in chords)
    if wit.kind == BAD_DIAMOND:
        if len(cyc) != 4 or wit.evidence not in wit.tips:
            return False
        found = _diamond(inst, sorted(cyc), wit.level)
        return found is not None and set(found.tips) == set(wit.tips)
    return False


# --- violation extraction -------------------------------------------------

def _hole_case(inst: GameInstance, wit: CycleWitness):
    """Triple and final witness for a bad hole."""
    C = list(wit.vertices)
    m = len(C)
    r = inst.root
    cap = inst.level_weight(wit.level)
    if r in C:
        j = C.index(r)
        u, v = C[j - 1], C[(j + 1) % m]
        return u, v, set(C) - {u, v}, wit
    near = [j for j in range(m) if inst.w(r, C[j]) <= cap]
    spread = any((b - a) % m not in (1, m - 1) for a, b in combinations(near, 2))
    if spread:
        # Replace the arc between the first root neighbors on either side of
        # the evidence vertex by the root itself.
        t = C.index(wit.evidence)
        p = t
        while p not in near:
            p = (p + 1) % m
        q = t
        while q not in near:
            q = (q - 1) % m
        arc = [C[q]]
        j = q
        while j != p:
            j = (j + 1) % m
            arc.append(C[j])
        hole = CycleWitness(BAD_HOLE, wit.level, canonical_cycle([r] + arc),
                            wit.evidence)
        return _hole_case(inst, hole)
    j = min(range(m), key=lambda x: (inst.w(r, C[x]), C[x]))
    u, v = C[j - 1], C[(j + 1) % m]
    return u, v, (set(C) | {r}) - {u, v}, wit


def _diamond_wit(inst, level, tips, non_tips, r):
    s, t = tips
    a, b = non_tips
    evidence = t if s == r else s
    return CycleWitness(BAD_DIAMOND, level, canonical_cycle([s, a, t, b]),
                        evidence, tuple(sorted(tips)))


def _diamond_case(inst: GameInstance, wit: CycleWitness):
    r = inst.root
    i = wit.level
    cap = inst.level_weight(i)
    w = inst.w
    if r in wit.tips:
        s = wit.tips[0] if wit.tips[1] == r else wit.tips[1]
        u, v = wit.non_tips
        return u, v, {r, s}, wit
    s, t = sorted(wit.tips, key=lambda x: (w(r, x), x))
    u, v = sorted(wit.non_tips, key=lambda x: (w(r, x), x))
    near = {x for x in wit.vertices if w(r, x) <= cap}
    if len(near) == 2 and near == {u, v}:
        if w(u, v) >= max(w(s, u), w(s, v)):
            return u, v, {r, s}, _diamond_wit(inst, i, (r, s), (u, v), r)
        return u, v, {r, t}, _diamond_wit(inst, i, (r, t), (u, v), r)
    if len(near) == 2:
        # near == {s, u}
        if w(s, u) >= max(w(r, s), w(r, u)):
            return s, u, {r, v}, _diamond_wit(inst, i, (r, v), (s, u), r)
    elif len(near) == 3:
        # near == {s, u, v}: try the diamond {r, t, u, v} first
        if w(u, v) >= max(w(t, u), w(t, v)) or w(u, v) >= max(w(r, u), w(r, v)):
            return u, v, {r, t}, _diamond_wit(inst, i, (r, t), (u, v), r)
        if w(s, u) >= max(w(r, s), w(r, u)):
            j = inst.level_of(r, v) - 1
            return s, u, {r, v}, _diamond_wit(inst, max(j, 1), (r, v), (s, u), r)
    return u, v, {r, s, t}, wit


def _fallback_triples(inst: GameInstance, wit: CycleWitness):
    r = inst.root
    C = list(wit.vertices)
    m = len(C)
    if wit.kind == BAD_HOLE:
        for j in range(m):
            u, v = C[j - 1], C[(j + 1) % m]
            yield u, v, (set(C) | {r}) - {u, v}
    pool = sorted(set(C) | {r})
    players = [x for x in pool if x != r]
    for u, v in combinations(players, 2):
        rest = [x for x in players if x not in (u, v)]
        for size in range(len(rest) + 1):
            for extra in combinations(rest, size):
                yield u, v, {r, *extra}


def extract_violation(inst: GameInstance, wit: CycleWitness) -> ViolationTriple:
    """Turn a bad hole or bad induced diamond into ``(u, v, S)`` with
    ``f_uv(S) < 0``.

    The triple is built by the case analysis (possibly rewriting the witness
    into one through the root).  If that triple does not verify, the
    neighbor triples of a hole are tried, then every triple inside the
    witness vertices plus the root (exponential in the cycle length; a
    safety net the test sweeps never reach).
    """
    if not validate_witness(inst, wit):
        raise ValueError(f"not a valid witness for this instance: {wit}")
    case = _hole_case if wit.kind == BAD_HOLE else _diamond_case
    u, v, S, final = case(inst, wit)
    if validate_witness(inst, final):
        try:
            return ViolationTriple.verified(inst, u, v, S, source=final,
                                            route="construction")
        except ExtractionError:
            pass
    for u, v, S in _fallback_triples(inst, wit):
        if f_uv(inst, u, v, S) < 0:
            return ViolationTriple.verified(inst, u, v, S, source=wit,
                                            route="fallback")
    raise ExtractionError(f"no violating triple found for witness {wit}")


def decide(inst: GameInstance) -> Verdict:
    wit = check_condition_i(inst)
    if wit is not None:
        return Verdict(False, witness=wit, violation=extract_violation(inst, wit))
    failing = check_condition_ii(inst)
    if failing is not None:
        (u, v), _ = failing
        triple = ViolationTriple.verified(
            inst, u, v, expensive_neighborhood(inst, u, v))
        return Verdict(False, violation=triple, failing_candidate=failing)
    return Verdict(True)
