import random
from fractions import Fraction
from pathlib import Path

import pytest

from setopt.io import load_problem
from setopt.polyhedra import ConeSpec
from setopt.rational import identity, mat, vec
from setopt.setcalc import ProblemInstance

FIXTURES = Path(__file__).parent / "fixtures"

# the four points of Example 1
X1 = vec([-1, 0])
X2 = vec([-1, 1])
X3 = vec([0, 0])
X4 = vec([0, 1])
Q_VERTICES = {vec(p) for p in [(0, 2), (2, 0), (-1, 4), (4, -1)]}
ORTHANT = {vec([1, 0]), vec([0, 1])}
HALF = Fraction(1, 2)


def fixture_path(name):
    return str(FIXTURES / f"{name}.json")


@pytest.fixture(scope="session")
def ex1():
    return load_problem(fixture_path("example1"))


@pytest.fixture(scope="session")
def ex2():
    return load_problem(fixture_path("example2"))


def random_bounded_instance(rng: random.Random, n=2, q=2, extra=3) -> ProblemInstance:
    """A feasible, bounded instance with C = R^q_+ and (0, 0) in gr F.

    x is boxed in [-1, 1]^n, every y_i is bounded below by an affine
    function of x, one row caps the sum of the y's from above, and the
    random rows have nonpositive right-hand sides so the origin is feasible.
    """
    A, B, b = [], [], []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        A += [e, [-a for a in e]]
        B += [[0] * q, [0] * q]
        b += [-1, -1]
    for i in range(q):
        e = [0] * q
        e[i] = 1
        A.append([rng.randint(-2, 2) for _ in range(n)])
        B.append(e)
        b.append(-rng.randint(1, 3))
    A.append([rng.randint(-1, 1) for _ in range(n)])
    B.append([-1] * q)
    b.append(-rng.randint(3, 6))
    for _ in range(extra):
        A.append([rng.randint(-2, 2) for _ in range(n)])
        B.append([rng.randint(0, 2) for _ in range(q)])
        b.append(-rng.randint(0, 2))
    return ProblemInstance(mat(A), mat(B), vec(b), ConeSpec(identity(q)))


def pytest_terminal_summary(terminalreporter):
    verdicts = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            name = getattr(rep, "nodeid", "").split("::")[-1]
            if name.startswith("test_criterion_"):
                num = int(name.split("_")[2])
                ok = key == "passed" and verdicts.get(num, True)
                verdicts[num] = ok
    if verdicts:
        terminalreporter.section("acceptance")
        for num in sorted(verdicts):
            terminalreporter.write_line(f"criterion {num}: {'PASS' if verdicts[num] else 'FAIL'}")
