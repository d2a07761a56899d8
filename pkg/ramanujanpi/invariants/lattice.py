import logging

import mpmath
import numpy as np

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.utils.arithmetic import positive_rational
from ramanujanpi.utils.types import Rational

logger = logging.getLogger(__name__)


def lattice_sum_g(r: Rational, ctx: PrecisionContext) -> mpmath.mpf:
    """Punctured lattice sum S(r) = sum' (-1)^m / (m^2 + r n^2) by row reduction.

    The n = 0 row is sum_{m != 0} (-1)^m / m^2 = -pi^2/6. Each row n != 0 is the
    alternating sum sum_m (-1)^m / (m^2 + a^2) = pi / (a sinh(pi a)) with
    a = |n| sqrt(r), so that

        S(r) = -pi^2/6 + (2 pi / sqrt(r)) sum_{n>=1} 1 / (n sinh(pi n sqrt(r))).

    The result equals -(pi / sqrt(r)) log(2 g_r^4).

    Parameters
    ----------
    r: Rational
        Positive rational.
    ctx: PrecisionContext
        Working precision.

    Returns
    -------
    value: mpmath.mpf
        S(r) at working precision.
    """
    mp = ctx.mp
    pi = ctx.pi
    root = mp.sqrt(ctx.convert(positive_rational(r)))
    eps = ctx.eps

    rows = mp.zero
    n = 1
    while True:
        term = 1 / (n * mp.sinh(pi * n * root))
        rows += term
        if term < eps * rows:
            break
        n += 1
    logger.debug("lattice sum used %d rows", n)

    return -(pi**2) / 6 + 2 * pi / root * rows


def lattice_sum_k(r: Rational, ctx: PrecisionContext) -> mpmath.mpf:
    """S(2r) - 4 S(8r), which equals -(pi / sqrt(2r)) log(lambda*(2r) / 4)."""
    r = positive_rational(r)
    return lattice_sum_g(2 * r, ctx) - 4 * lattice_sum_g(8 * r, ctx)


def lattice_sum_brute(r: float, bound: int = 2000) -> float:
    """Brute-force truncation of the lattice sum over |m|, |n| <= bound in float64.

    Rows are summed as numpy vectors. The columns |m| = bound enter with weight 1/2,
    which cancels the leading truncation error of the alternating row sums.

    Parameters
    ----------
    r: float
        Positive ratio of the quadratic form m^2 + r n^2.
    bound: int, optional
        Truncation bound, defaults to 2000.

    Returns
    -------
    value: float
        Truncated sum.
    """
    if r <= 0:
        raise ValueError(f"Expected r to be positive, got {r}.")
    if bound < 1:
        raise ValueError(f"Expected bound to be positive, got {bound}.")
    m = np.arange(-bound, bound + 1, dtype=np.float64)
    signs = np.where(np.arange(-bound, bound + 1) % 2 == 0, 1.0, -1.0)
    weights = signs.copy()
    weights[[0, -1]] *= 0.5
    squares = m**2

    centre = weights[squares > 0] / squares[squares > 0]
    total = centre.sum()
    for n in range(1, bound + 1):
        total += 2 * np.sum(weights / (squares + float(r) * n * n))

    return float(total)
