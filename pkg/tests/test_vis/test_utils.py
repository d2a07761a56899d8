import pytest
import matplotlib
matplotlib.use('agg')
from matplotlib import pyplot as plt    # noqa: 402

from ramanujanpi.vis.utils import check_axes_given   # noqa: 402


@check_axes_given
def _axes_of(ax=None):
    return ax


@pytest.mark.plot
def test_check_axes_given_creates_axes() -> None:
    # Act
    created = _axes_of()
    also_created = _axes_of(ax=None)

    # Assert
    assert isinstance(created, plt.Axes)
    assert isinstance(also_created, plt.Axes)
    assert created is not also_created


@pytest.mark.plot
def test_check_axes_given_keeps_axes(example_ax) -> None:
    # Act
    ax = _axes_of(ax=example_ax)

    # Assert
    assert ax is example_ax
