import pytest

from mstgame import GameInstance

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def make_a() -> GameInstance:
    """4-cycle r-a-b-c at weight 1, diagonals rb and ac at weight 2."""
    return GameInstance.from_named("r", {
        ("r", "a"): 1, ("a", "b"): 1, ("b", "c"): 1, ("c", "r"): 1,
        ("r", "b"): 2, ("a", "c"): 2})


def make_d() -> GameInstance:
    """Diamond with tips r and s: only rs is expensive."""
    return GameInstance.from_named("r", {
        ("r", "u"): 1, ("r", "v"): 1, ("s", "u"): 1, ("s", "v"): 1,
        ("u", "v"): 1, ("r", "s"): 2}, vertices=["r", "u", "v", "s"])


def make_u() -> GameInstance:
    return GameInstance.from_named("r", {("r", "a"): 1, ("r", "b"): 1, ("a", "b"): 1})


# Condition (i) holds but candidate edge (p1, p2) has f = -1 on its expensive
# neighborhood; found by seeded search (5 vertices, weights 1..3) and
# confirmed non-submodular by the brute-force oracle.
CONDITION_II_WEIGHTS = [
    (0, 1, 2), (0, 2, 2), (0, 3, 3), (0, 4, 3), (1, 2, 1),
    (1, 3, 2), (1, 4, 2), (2, 3, 2), (2, 4, 2), (3, 4, 3)]


def make_condition_ii() -> GameInstance:
    return GameInstance(5, 0, {(u, v): w for u, v, w in CONDITION_II_WEIGHTS},
                        ["r", "p1", "p2", "p3", "p4"])


@pytest.fixture
def inst_a():
    return make_a()


@pytest.fixture
def inst_d():
    return make_d()


@pytest.fixture
def inst_u():
    return make_u()


def idx(inst, *names):
    pos = {x: i for i, x in enumerate(inst.names)}
    return tuple(pos[x] for x in names)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(
            f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
