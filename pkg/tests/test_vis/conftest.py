import pytest
import matplotlib
matplotlib.use('agg')
import matplotlib.pyplot as plt     # noqa: 402

from ramanujanpi.core.precision import PrecisionContext    # noqa: 402
from ramanujanpi.series.catalog import get_spec    # noqa: 402


@pytest.fixture()
def example_ax():
    return plt.subplots()[1]


@pytest.fixture()
def example_specs() -> list:
    return [get_spec(key) for key in ("chudnovsky", "ramanujan58", "ramanujan7g")]


@pytest.fixture()
def ctx40() -> PrecisionContext:
    return PrecisionContext(40)
