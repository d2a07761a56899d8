from fractions import Fraction
from typing import Dict

import pytest

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.singular import SingularData
from ramanujanpi.io.tables import singular_values_by_index


@pytest.fixture()
def ctx30() -> PrecisionContext:
    return PrecisionContext(30)


@pytest.fixture()
def ctx60() -> PrecisionContext:
    return PrecisionContext(60)


@pytest.fixture()
def table_rows() -> Dict[Fraction, SingularData]:
    return singular_values_by_index()
