import logging
import math
from typing import List

import matplotlib
import numpy as np

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.series import SeriesSpec
from ramanujanpi.series.evaluate import evaluate_direct
from ramanujanpi.vis.utils import check_axes_given

logger = logging.getLogger(__name__)


def digits_reached(
    spec: SeriesSpec, n_terms: int, ctx: PrecisionContext
) -> np.ndarray:
    """Correct decimal digits of the partial sums over 1, ..., n_terms terms.

    Values are clipped to [0, digits of `ctx`].
    """
    if n_terms < 1:
        raise ValueError(f"Expected n_terms to be positive, got {n_terms}.")
    reference = spec.target_value(ctx)
    digits = np.empty(n_terms)
    for n in range(1, n_terms + 1):
        report = evaluate_direct(spec, ctx, n_terms=n)
        digits[n - 1] = report.digits_correct(reference)

    return np.clip(digits, 0, ctx.digits)


@check_axes_given
def plot_convergence(
    specs: List[SeriesSpec],
    n_terms: int,
    ctx: PrecisionContext,
    ax: matplotlib.axes = None,
    **kwargs,
) -> matplotlib.axes:
    """Plots the correct digits reached against the number of terms summed.

    Parameters
    ----------
    specs: List[SeriesSpec]
        Catalog or built specs. Elementary specs are summed with the same term counts
        and stay near the bottom of the plot.
    n_terms: int
        Largest number of terms.
    ctx: PrecisionContext
        Working precision, which also caps the digits axis.
    ax: matplotlib.axes, optional
        Axes from matplotlib library to plot on. Created if not given.
    kwargs:
        Optional keyworded arguments e.g. {'marker', 'linewidth'} passed on to
        matplotlib's plot().

    Returns
    -------
    axes: matplotib.axes
        Axes with one line per spec, labeled by catalog key.

    Examples
    --------
    >>> import matplotlib.pyplot as plt
    >>> from ramanujanpi.core.precision import PrecisionContext
    >>> from ramanujanpi.series.catalog import get_spec
    >>> from ramanujanpi.vis.convergence import plot_convergence
    >>> specs = [get_spec(key) for key in ("chudnovsky", "ramanujan58", "ramanujan7j")]
    >>> ax = plot_convergence(specs, 10, PrecisionContext(120))
    >>> plt.show()
    """
    marker = kwargs.pop("marker", "o")
    markersize = kwargs.pop("markersize", 3)

    terms = np.arange(1, n_terms + 1)
    for spec in specs:
        digits = digits_reached(spec, n_terms, ctx)
        logger.debug("%s: %.1f digits after %d terms", spec.key, digits[-1], n_terms)
        ax.plot(
            terms,
            digits,
            marker=marker,
            markersize=markersize,
            label=spec.key,
            **kwargs,
        )

    ax.set_xlabel("terms")
    ax.set_ylabel("correct digits")
    ax.set_ylim(0, math.ceil(ctx.digits * 1.05))
    ax.legend()

    return ax
