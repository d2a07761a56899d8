import pytest

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.quadratic import QuadraticSurd
from ramanujanpi.core.report import VerificationReport


@pytest.fixture()
def ctx30() -> PrecisionContext:
    return PrecisionContext(30)


@pytest.fixture()
def ctx50() -> PrecisionContext:
    return PrecisionContext(50)


@pytest.fixture()
def unit_29() -> QuadraticSurd:
    # fundamental unit of Q(sqrt(29)), norm -1
    return QuadraticSurd("5/2", "1/2", 29)


@pytest.fixture()
def example_checks() -> list:
    checks = [
        ("legendre", "k=0.5 legendre", 1e-40, 1e-28),
        ("legendre", "k=0.25 legendre", 3e-41, 1e-28),
        ("tables", "N=13 alpha", 0.25, 1e-24),
        ("units", "N=13 unit", 0, 0),
    ]
    return checks


@pytest.fixture()
def example_report(example_checks) -> VerificationReport:
    return VerificationReport.from_checks(example_checks, digits=30)
