from fractions import Fraction

import pytest

from superwalk import AlgebraKind, ProbVector


def pytest_addoption(parser):
    parser.addoption(
        "--regen-golden",
        action="store_true",
        default=False,
        help="rewrite the golden CLI output files instead of comparing",
    )


@pytest.fixture
def regen_golden(request):
    return request.config.getoption("--regen-golden")


@pytest.fixture
def kinds_small():
    return [AlgebraKind.empty(3), AlgebraKind.hook(2, 2), AlgebraKind.strict(3)]


@pytest.fixture
def kinds_dim2():
    return [AlgebraKind.empty(2), AlgebraKind.hook(1, 1), AlgebraKind.strict(2)]


def decreasing_prob(kind, base=2) -> ProbVector:
    raw = [Fraction(base ** (kind.N - i)) for i in range(kind.N)]
    total = sum(raw)
    return ProbVector(kind, tuple(v / total for v in raw))
