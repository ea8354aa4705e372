"""Seeded random instances."""

from __future__ import annotations

import random
from itertools import combinations

from .instance import GameInstance


def vertex_names(n: int) -> list[str]:
    return ["r"] + [f"p{i}" for i in range(1, n)]


def random_instance(n: int, levels: int, seed: int) -> GameInstance:
    """Complete graph on ``n`` vertices (root ``r`` first) with weights drawn
    uniformly from ``1..levels``, pairs in lexicographic order."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if levels < 1:
        raise ValueError("levels must be at least 1")
    rng = random.Random(seed)
    weights = {e: rng.randint(1, levels) for e in combinations(range(n), 2)}
    return GameInstance(n, 0, weights, vertex_names(n))
