import pytest
from hypothesis import HealthCheck, settings

from qgkit.artin import from_presentation
from qgkit.graded import GradedQuotientRing
from qgkit.poly import PolynomialRing

settings.register_profile(
    "qgkit",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("qgkit")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def presentation(variables, relations):
    P = PolynomialRing(variables)
    return P, [P.parse(r) for r in relations]


@pytest.fixture(scope="session")
def P3():
    return PolynomialRing(["x", "y", "z"])


@pytest.fixture(scope="session")
def P2():
    return PolynomialRing(["x", "y"])


@pytest.fixture(scope="session")
def dim8():
    P, rels = presentation("xyz", ["x^2", "y^2 + x*z", "z^2"])
    return from_presentation(P, rels)


@pytest.fixture(scope="session")
def square_zero():
    P, rels = presentation("xy", ["x^2", "x*y", "y^2"])
    return from_presentation(P, rels)


@pytest.fixture(scope="session")
def node():
    P, rels = presentation("xy", ["x*y"])
    return GradedQuotientRing(P, rels)


@pytest.fixture(scope="session")
def plane_line():
    P, rels = presentation("xyz", ["x*y", "x*z"])
    return GradedQuotientRing(P, rels)


@pytest.fixture(scope="session")
def poly2(P2):
    return GradedQuotientRing(P2, [])
