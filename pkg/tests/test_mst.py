from itertools import combinations

import pytest

from mstgame import characteristic, f_uv, mst, mst_weight
from mstgame.generate import random_instance
from mstgame.mst import UnionFind, greedy_tree
from mstgame.oracle import prim_weight

from conftest import idx
from oracles import brute_mst_weight


def test_instance_a_full_tree(inst_a):
    assert brute_mst_weight(inst_a, range(4)) == 3
    tree = mst(inst_a, range(4))
    assert tree.total_weight == 3
    assert len(tree.edges) == 3
    assert all(inst_a.w(*e) == 1 for e in tree.edges)


def test_two_vertex_subgraph(inst_a):
    r, b = idx(inst_a, "r", "b")
    tree = mst(inst_a, {r, b})
    assert tree.edges == ((r, b),)
    assert tree.total_weight == 2


def test_uniform(inst_u):
    assert mst_weight(inst_u, range(3)) == 2


def test_singleton_and_empty(inst_a):
    assert mst_weight(inst_a, {2}) == 0
    with pytest.raises(ValueError):
        mst(inst_a, set())
    with pytest.raises(ValueError):
        mst(inst_a, {0, 9})


def test_tree_structure():
    inst = random_instance(8, 4, 5)
    tree = mst(inst, range(8))
    uf = UnionFind(range(8))
    assert all(uf.union(*e) for e in tree.edges)
    assert len(tree.edges) == 7
    assert tree.total_weight == sum(inst.w(*e) for e in tree.edges)
    adj = tree.tree_adjacency
    assert sum(len(v) for v in adj.values()) == 14
    assert tree.neighbors(0) == adj[0]


@pytest.mark.parametrize("seed", range(15))
def test_against_enumeration(seed):
    inst = random_instance(6, 3, seed)
    for size in (1, 3, 5, 6):
        for S in combinations(range(6), size):
            assert mst_weight(inst, S) == brute_mst_weight(inst, S)


def test_against_prim():
    for seed in range(30):
        inst = random_instance(8, 5, seed)
        for mask in range(1, 1 << 8, 7):
            S = [x for x in range(8) if mask >> x & 1]
            assert mst_weight(inst, S) == prim_weight(inst, mask)


def test_deterministic_edges():
    inst = random_instance(9, 2, 1)
    first = mst(inst, range(9))
    assert all(mst(inst, range(9)) == first for _ in range(5))
    # ties go to the lexicographically smallest endpoint pair
    uf = UnionFind(range(9))
    expected = [e for e in sorted(combinations(range(9), 2),
                                  key=lambda e: (inst.w(*e), e))
                if uf.union(*e)]
    assert first.edges == tuple(sorted(expected))


def test_characteristic(inst_a):
    a, b, c = idx(inst_a, "a", "b", "c")
    assert characteristic(inst_a, {a}) == 1
    assert characteristic(inst_a, {a, b, c}) == 3
    assert characteristic(inst_a, set()) == 0
    with pytest.raises(ValueError):
        characteristic(inst_a, {0, a})


class TestFuv:
    def test_instance_a(self, inst_a):
        r, a, b, c = idx(inst_a, "r", "a", "b", "c")
        # 2 + 2 - 2 - 3
        assert f_uv(inst_a, a, c, {r, b}) == -1

    def test_instance_d(self, inst_d):
        r, u, v, s = idx(inst_d, "r", "u", "v", "s")
        assert f_uv(inst_d, u, v, {r, s}) == -1

    def test_uniform(self, inst_u):
        assert f_uv(inst_u, 1, 2, {0}) == 0

    def test_symmetric_in_u_v(self):
        inst = random_instance(6, 3, 2)
        assert f_uv(inst, 1, 4, {0, 2}) == f_uv(inst, 4, 1, {0, 2})

    @pytest.mark.parametrize("u, v, S", [
        (1, 1, {0}), (0, 1, {2}), (1, 2, {3}), (1, 2, {0, 1}), (1, 2, {0, 2})])
    def test_admissibility(self, inst_a, u, v, S):
        with pytest.raises(ValueError):
            f_uv(inst_a, u, v, S)


@pytest.mark.parametrize("seed", range(10))
def test_restriction_property(seed):
    """Seeding greedy with the part of a global MST inside S stays optimal."""
    inst = random_instance(7, 3, seed)
    T = mst(inst, range(7))
    for mask in range(1, 1 << 7):
        S = {x for x in range(7) if mask >> x & 1}
        forced = [e for e in T.edges if e[0] in S and e[1] in S]
        assert greedy_tree(inst, S, forced).total_weight == mst_weight(inst, S)


def test_forced_edges_validated(inst_a):
    with pytest.raises(ValueError, match="cycle"):
        greedy_tree(inst_a, range(4), [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(ValueError, match="leaves"):
        greedy_tree(inst_a, {0, 1}, [(1, 2)])
