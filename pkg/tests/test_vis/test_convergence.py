import pytest
import matplotlib
matplotlib.use('agg')
from matplotlib import pyplot as plt    # noqa: 402

from ramanujanpi.series.catalog import get_spec    # noqa: 402
from ramanujanpi.vis.convergence import digits_reached, plot_convergence  # noqa: 402


@pytest.mark.unit
def test_digits_reached(ctx40) -> None:
    # Act
    chudnovsky = digits_reached(get_spec("chudnovsky"), 4, ctx40)
    gregory = digits_reached(get_spec("gregory"), 3, ctx40)

    # Assert
    assert chudnovsky.shape == (4,)
    assert 13 < chudnovsky[0] < 15
    assert 27 < chudnovsky[1] < 29
    assert chudnovsky[-1] == 40
    assert (gregory >= 0).all()
    assert (gregory < 2).all()


@pytest.mark.unit
def test_digits_reached_needs_terms(ctx40) -> None:
    # Assert
    with pytest.raises(ValueError):
        digits_reached(get_spec("chudnovsky"), 0, ctx40)


@pytest.mark.plot
def test_plot_convergence(example_specs, ctx40) -> None:
    # Act
    ax = plot_convergence(example_specs, 5, ctx40)

    # Assert
    assert isinstance(ax, plt.Axes)
    assert len(ax.get_lines()) == 3
    assert ax.get_xlabel() == "terms"
    assert ax.get_ylabel() == "correct digits"
    labels = [text.get_text() for text in ax.get_legend().get_texts()]
    assert labels == ["chudnovsky", "ramanujan58", "ramanujan7g"]


@pytest.mark.plot
def test_plot_convergence_on_given_axes(example_specs, example_ax, ctx40) -> None:
    # Act
    ax = plot_convergence(example_specs[:1], 3, ctx40, ax=example_ax, marker="x")

    # Assert
    assert ax is example_ax
    assert ax.get_lines()[0].get_marker() == "x"
