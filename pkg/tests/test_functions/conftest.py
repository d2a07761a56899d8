import pytest

from ramanujanpi.core.modulus import Modulus
from ramanujanpi.core.precision import PrecisionContext


@pytest.fixture()
def ctx30() -> PrecisionContext:
    return PrecisionContext(30)


@pytest.fixture()
def ctx50() -> PrecisionContext:
    return PrecisionContext(50)


@pytest.fixture()
def example_moduli(ctx50) -> list:
    return [Modulus.from_k(k, ctx50) for k in ("0.05", "0.3", "1/2", "0.9", "0.999")]
