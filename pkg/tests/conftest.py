import pytest

from quasitoric.bundles import BundleSpec
from quasitoric.charmap import CharMatrix, base_polytope, build_bundle_char_matrix
from quasitoric.cohomring import present_cohomology, ring_from_relations
from quasitoric.poly import Poly
from quasitoric.polytope import build_simplex

CP2_MATRIX = [[1, 0, -1], [0, 1, -1]]
HIRZ1_MATRIX = [[1, 0, -1, -2], [0, 1, -1, -1]]
P1xP1_MATRIX = [[1, 0, -1, 0], [0, 1, 0, -1]]
CUBE_M = [[1, 0, 0, -1, -1, -1], [0, 1, 0, 0, -1, -2], [0, 0, 1, 0, -1, -1]]
CUBE_N = [[1, 0, 0, -1, -1, -1], [0, 1, 0, 0, -1, -2], [0, 0, 1, -2, -1, -1]]
EX1 = [[1, 0, 0, -1, -2], [0, 1, 0, 0, -1], [0, 0, 1, 0, -1]]
PHI = [[-1, -1, -1], [2, 1, 2], [0, 0, -1]]


def P(nvars, terms):
    """Shorthand: P(2, {(1, 1): 3}) is 3xy."""
    return Poly(nvars, terms)


@pytest.fixture(scope="session")
def cube_m():
    return build_bundle_char_matrix(HIRZ1_MATRIX, [[1, 1]])


@pytest.fixture(scope="session")
def cube_n(cube_m):
    return CharMatrix(cube_m.polytope, CUBE_N)


@pytest.fixture(scope="session")
def ring_m(cube_m):
    return present_cohomology(cube_m.polytope, cube_m, ["x", "y", "z"])


@pytest.fixture(scope="session")
def ring_n(cube_m, cube_n):
    return present_cohomology(cube_m.polytope, cube_n, ["X", "Y", "Z"])


@pytest.fixture(scope="session")
def cp2():
    return present_cohomology(build_simplex(2), CP2_MATRIX, ["t"])


@pytest.fixture(scope="session")
def hirz1():
    return present_cohomology(base_polytope(2), HIRZ1_MATRIX, ["x", "y"])


@pytest.fixture(scope="session")
def p1xp1():
    return present_cohomology(base_polytope(2), P1xP1_MATRIX, ["x", "y"])


@pytest.fixture(scope="session")
def hirz1_literal():
    # Z[x,y]/<x(x+2y), y(x+y)> written out by hand
    return ring_from_relations(["x", "y"], [{(2, 0): 1, (1, 1): 2}, {(1, 1): 1, (0, 2): 1}])


@pytest.fixture
def cube_spec(hirz1):
    return BundleSpec(hirz1, [[1, 1]])


# acceptance lines are collected here and printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
