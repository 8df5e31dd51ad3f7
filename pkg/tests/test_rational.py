from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from setopt.errors import InputError
from setopt.rational import (
    canonical_direction,
    format_rational,
    identity,
    mat,
    matvec,
    parse_rational,
    scale,
    solve_linear_system,
    vec,
)

rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
nonzero = rationals.filter(bool)
positive = st.fractions(min_value=Fraction(1, 50), max_value=100, max_denominator=50)


def test_identity_system():
    assert solve_linear_system(identity(2), vec([3, "-1/2"])) == vec([3, "-1/2"])


def test_two_by_two():
    assert solve_linear_system(mat([[1, 1], [1, -1]]), vec([2, 0])) == vec([1, 1])


def test_inconsistent_rank_one():
    assert solve_linear_system(mat([[1, 1], [2, 2]]), vec([1, 3])) is None


def test_rectangular_consistent():
    m = mat([[1, 2, 3], [0, 1, 1]])
    x = solve_linear_system(m, vec([6, 2]))
    assert matvec(m, x) == vec([6, 2])


def test_dimension_mismatch():
    with pytest.raises(InputError):
        solve_linear_system(identity(2), vec([1]))


@pytest.mark.parametrize("v, expected", [
    ([2, 4], [1, 2]),
    (["-1/2", "3/2"], [-1, 3]),
    ([0, -5], [0, -1]),
])
def test_canonical_direction(v, expected):
    assert canonical_direction(vec(v)) == vec(expected)


def test_canonical_direction_zero():
    with pytest.raises(InputError):
        canonical_direction(vec([0, 0]))


@pytest.mark.parametrize("text, value", [
    (3, Fraction(3)), ("-7/14", Fraction(-1, 2)), ("5", Fraction(5)), (" 2/3 ", Fraction(2, 3)),
])
def test_parse(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", [1.5, "1/0", "abc", True, None, "1.5"])
def test_parse_rejects(bad):
    with pytest.raises(InputError):
        parse_rational(bad)


def test_format_round_trip():
    assert format_rational(Fraction(4, 2)) == 2
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert parse_rational(format_rational(Fraction(-3, 6))) == Fraction(-1, 2)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) - b == a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a.denominator > 0


@given(nonzero)
def test_inverse(a):
    assert a * (1 / a) == 1


@given(st.lists(rationals, min_size=1, max_size=5).filter(any), positive)
def test_canonical_direction_scale_invariant(v, lam):
    v = tuple(v)
    assert canonical_direction(scale(lam, v)) == canonical_direction(v)
    c = canonical_direction(v)
    assert all(x.denominator == 1 for x in c)
    # same orientation
    assert all((a > 0) == (b > 0) and (a < 0) == (b < 0) for a, b in zip(v, c))


@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=1, max_size=4),
                        st.lists(rationals, min_size=n, max_size=n))))
def test_solution_satisfies_system(data):
    rows, x = data
    m = tuple(tuple(r) for r in rows)
    rhs = matvec(m, tuple(x))
    sol = solve_linear_system(m, rhs)
    assert sol is not None
    assert matvec(m, sol) == rhs
