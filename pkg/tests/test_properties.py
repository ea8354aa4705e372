"""Randomized properties over hypothesis-generated complete instances."""

from fractions import Fraction
from itertools import combinations

from hypothesis import given, settings, strategies as st

from mstgame import GameInstance, check_condition_i, decide, f_uv, mst, mst_weight
from mstgame.mst import UnionFind
from mstgame.oracle import brute_force_submodular

from oracles import witness_is_sound


@st.composite
def instances(draw, min_n=3, max_n=7, max_level=4):
    n = draw(st.integers(min_n, max_n))
    levels = draw(st.integers(1, max_level))
    pairs = list(combinations(range(n), 2))
    ws = draw(st.lists(st.integers(1, levels), min_size=len(pairs), max_size=len(pairs)))
    return GameInstance(n, 0, dict(zip(pairs, ws)))


@settings(max_examples=150, deadline=None)
@given(instances())
def test_decide_matches_oracle(inst):
    verdict = decide(inst)
    assert verdict.submodular == brute_force_submodular(inst).submodular
    if not verdict.submodular:
        t = verdict.violation
        assert f_uv(inst, t.u, t.v, t.S) == t.value < 0
    if verdict.witness is not None:
        assert witness_is_sound(inst, verdict.witness)


@settings(max_examples=60, deadline=None)
@given(instances(), st.randoms(use_true_random=False))
def test_relabel_invariance(inst, rnd):
    perm = list(range(inst.n))
    rnd.shuffle(perm)
    assert decide(inst.relabel(perm)).submodular == decide(inst).submodular


@settings(max_examples=60, deadline=None)
@given(instances(), st.integers(-5, 5), st.integers(1, 4))
def test_affine_invariance(inst, shift, scale):
    # f_uv(S) scales with the weights and ignores a uniform shift, since each
    # of its four trees has a fixed edge count
    moved = inst.map_weights(lambda w: Fraction(w * scale + shift, 3))
    assert decide(moved).submodular == decide(inst).submodular


@settings(max_examples=40, deadline=None)
@given(instances())
def test_deterministic(inst):
    twin = GameInstance(inst.n, inst.root, {(u, v): w for u, v, w in inst.weight_items()})
    assert decide(inst) == decide(inst) == decide(twin)


@settings(max_examples=80, deadline=None)
@given(instances(max_n=6), st.data())
def test_reconnect(inst, data):
    """Without bad holes or diamonds, deleting s from an MST T of G[S] can be
    repaired optimally with edges among N_T(s) and the root only."""
    if check_condition_i(inst) is not None:
        return
    others = [x for x in range(inst.n) if x != inst.root]
    members = data.draw(st.lists(st.sampled_from(others), min_size=1, unique=True))
    S = {inst.root, *members}
    s = data.draw(st.sampled_from(members))
    tree = mst(inst, S)
    keep = [e for e in tree.edges if s not in e]
    pool = sorted(set(tree.neighbors(s)) | {inst.root})
    uf = UnionFind(S - {s})
    total = sum(inst.w(a, b) for a, b in keep)
    for a, b in keep:
        uf.union(a, b)
    for a, b in sorted(((a, b) for a, b in combinations(pool, 2)),
                       key=lambda e: inst.w(*e)):
        if uf.union(a, b):
            total += inst.w(a, b)
    assert len({uf.find(x) for x in S - {s}}) == 1
    assert total == mst_weight(inst, S - {s})
