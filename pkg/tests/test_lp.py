import random
from fractions import Fraction

import pytest

import oracles
from setopt.errors import InputError
from setopt.lp import LinearProgram, LPStatus, lp_solve
from setopt.rational import dot, mat, matvec, vec


def lp(c, G, g):
    return LinearProgram(vec(c), mat(G), vec(g))


def test_simple_max():
    out = lp_solve(lp([1], [[-1], [1]], [-1, 0]))
    assert out.status is LPStatus.OPTIMAL
    assert out.value == 1
    assert out.point == vec([1])


def test_contradictory_bounds():
    assert lp_solve(lp([1], [[1], [-1]], [1, 0])).status is LPStatus.INFEASIBLE


def test_unbounded_ray():
    prob = lp([1, 1], [[1, 0], [0, 1]], [1, 0])
    out = lp_solve(prob)
    assert out.status is LPStatus.UNBOUNDED
    assert all(v >= 0 for v in matvec(prob.constraints, out.ray))
    assert dot(prob.objective, out.ray) > 0


def test_free_variables_negative_optimum():
    # max -v1 - v2 subject to v1 >= -3, v2 >= -5
    out = lp_solve(lp([-1, -1], [[1, 0], [0, 1]], [-3, -5]))
    assert out.value == 8
    assert out.point == vec([-3, -5])


def test_equality_pair_and_redundant_rows():
    # v1 + v2 = 2 written twice, maximize v1 with v2 >= 0
    out = lp_solve(lp([1, 0], [[1, 1], [-1, -1], [2, 2], [-2, -2], [0, 1]], [2, -2, 4, -4, 0]))
    assert out.value == 2


def test_shape_validation():
    with pytest.raises(InputError):
        LinearProgram(vec([1, 2]), mat([[1]]), vec([0]))
    with pytest.raises(InputError):
        LinearProgram(vec([1]), mat([[1]]), vec([0, 1]))


def test_beale_cycling_instance():
    # Beale's example cycles under the textbook largest-coefficient rule
    c = vec(["3/4", -150, "1/50", -6])
    G = mat([
        [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1],
        ["-1/4", 60, "1/25", -9],
        ["-1/2", 90, "1/50", -3],
        [0, 0, -1, 0],
    ])
    g = vec([0, 0, 0, 0, 0, 0, -1])
    out = lp_solve(LinearProgram(c, G, g))
    assert out.status is LPStatus.OPTIMAL
    assert out.value == Fraction(1, 20)
    assert out.value == oracles.lp_max(c, G, g)


def test_deterministic():
    prob = lp([1, 2, 3], [[-1, -1, -1], [1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, 0, -1]], [-4, 0, 0, 0, -2])
    assert lp_solve(prob) == lp_solve(prob)


def random_lp(rng):
    nv = rng.randint(1, 3)
    m = rng.randint(nv, 6)
    G = [[Fraction(rng.randint(-4, 4)) for _ in range(nv)] for _ in range(m)]
    g = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(m)]
    c = [Fraction(rng.randint(-3, 3)) for _ in range(nv)]
    return LinearProgram(tuple(c), tuple(map(tuple, G)), tuple(g))


def full_column_rank(G, nv):
    from itertools import combinations
    return any(oracles.det([list(G[i]) for i in idx]) != 0 for idx in combinations(range(len(G)), nv))


def test_random_lps_against_basic_solution_oracle():
    rng = random.Random(20240601)
    checked = {"optimal": 0, "infeasible": 0, "unbounded": 0}
    while sum(checked.values()) < 150:
        prob = random_lp(rng)
        if not full_column_rank(prob.constraints, prob.var_count):
            continue
        out = lp_solve(prob)
        bfs = oracles.vertices(prob.constraints, prob.rhs, prob.var_count)
        if out.status is LPStatus.OPTIMAL:
            assert prob.is_feasible_point(out.point)
            assert out.value == dot(prob.objective, out.point)
            assert out.value == max(dot(prob.objective, p) for p in bfs)
        elif out.status is LPStatus.INFEASIBLE:
            # a pointed nonempty polyhedron always has a vertex
            assert not bfs
        else:
            assert bfs
            assert all(v >= 0 for v in matvec(prob.constraints, out.ray))
            assert dot(prob.objective, out.ray) > 0
        checked[out.status.value] += 1
    assert all(checked.values()), checked


def test_random_feasible_points_never_beat_optimum():
    rng = random.Random(7)
    for _ in range(40):
        prob = random_lp(rng)
        out = lp_solve(prob)
        if not out.optimal:
            continue
        for _ in range(30):
            v = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 4)) for _ in range(prob.var_count))
            if prob.is_feasible_point(v):
                assert dot(prob.objective, v) <= out.value
