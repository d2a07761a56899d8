import logging
import math
import warnings
from typing import Tuple

import mpmath
import numpy as np

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.series import SeriesSpec
from ramanujanpi.settings import BENCH_TERM_BUDGET, TERM_BUDGET

logger = logging.getLogger(__name__)


def estimated_elementary_terms(kind: str, digits: int) -> int:
    """Terms (or continued fraction depth) needed for 10^(-digits) accuracy.

    The remainders of Gregory's series and of Brouncker's continued fraction decay
    like 1/(2n) and 2/(2n), the remainder of sum 1/n^2 like 1/n.
    """
    if kind == "gregory":
        return 10**digits // 2
    return 10**digits


def gregory_sum(n_terms: int, ctx: PrecisionContext) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Partial sum of sum (-1)^n / (2n+1) and the remainder bound 1/(2N+1)."""
    mp = ctx.mp
    total = mp.zero
    for n in range(n_terms):
        term = mp.one / (2 * n + 1)
        total += term if n % 2 == 0 else -term

    return total, mp.one / (2 * n_terms + 1)


def euler_sum(n_terms: int, ctx: PrecisionContext) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Partial sum of sum_{n>=1} 1/n^2 over N terms and the remainder bound 1/N."""
    mp = ctx.mp
    total = mp.fsum(mp.one / (n * n) for n in range(1, n_terms + 1))

    return total, mp.one / n_terms


def brouncker_value(depth: int, ctx: PrecisionContext) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Brouncker's continued fraction 1 + 1^2/(2 + 3^2/(2 + ...)) truncated at a depth.

    Evaluated bottom-up. The truncation at depth d equals 1/S_{d+1}, the reciprocal
    of a partial sum of Gregory's series, so its distance to 4/pi is at most
    2/(2d+3).
    """
    mp = ctx.mp
    if depth == 0:
        return mp.one, mp.mpf(2) / 3
    tail = mp.mpf(2)
    for j in range(depth - 1, 0, -1):
        tail = 2 + (2 * j + 1) ** 2 / tail

    return 1 + 1 / tail, mp.mpf(2) / (2 * depth + 3)


def _brouncker_doubling(ctx: PrecisionContext, budget: int) -> Tuple[mpmath.mpf, int]:
    depth = 1
    previous, _ = brouncker_value(depth, ctx)
    while True:
        depth *= 2
        if depth > budget:
            raise ValueError("impractical method for requested digits")
        value, _ = brouncker_value(depth, ctx)
        if abs(value - previous) < ctx.tolerance(0):
            return value, depth
        previous = value


def evaluate_elementary(
    spec: SeriesSpec, ctx: PrecisionContext, n_terms: int = None
) -> Tuple[mpmath.mpf, int, mpmath.mpf]:
    """Evaluates an elementary benchmark at working precision.

    Parameters
    ----------
    spec: SeriesSpec
        Spec of kind ``"gregory"``, ``"euler"`` or ``"brouncker"``.
    ctx: PrecisionContext
        Working precision.
    n_terms: int, optional
        Number of terms to sum (depth + 1 for Brouncker). Without it, the series is
        summed to 10^(-digits), which needs about 10^digits terms.

    Returns
    -------
    result: Tuple[mpmath.mpf, int, mpmath.mpf]
        Value, terms used and remainder bound.

    Raises
    ------
    ValueError
        If no term count is given and the required count exceeds the term budget.
    """
    if n_terms is None:
        needed = estimated_elementary_terms(spec.kind, ctx.digits)
        if needed > TERM_BUDGET:
            raise ValueError("impractical method for requested digits")
        if spec.kind == "brouncker":
            value, depth = _brouncker_doubling(ctx, TERM_BUDGET)
            return value, depth + 1, ctx.mp.mpf(2) / (2 * depth + 3)
        n_terms = needed
    if n_terms < 1:
        raise ValueError(f"Expected n_terms to be positive, got {n_terms}.")

    if spec.kind == "gregory":
        value, bound = gregory_sum(n_terms, ctx)
    elif spec.kind == "euler":
        value, bound = euler_sum(n_terms, ctx)
    else:
        value, bound = brouncker_value(n_terms - 1, ctx)
    logger.debug("%s summed with %d terms", spec.key, n_terms)

    return value, n_terms, bound


def elementary_float_sum(kind: str, n_terms: int) -> float:
    """Double precision partial sum of an elementary benchmark, for ``pi bench``.

    Gregory and Euler partial sums are vectorized with numpy, smallest terms first.
    Brouncker's continued fraction is unwound in a plain loop.
    """
    if n_terms > BENCH_TERM_BUDGET:
        warnings.warn(
            f"Capping {n_terms} terms at the bench budget of {BENCH_TERM_BUDGET}.",
            RuntimeWarning,
        )
        n_terms = BENCH_TERM_BUDGET
    if kind == "gregory":
        n = np.arange(n_terms - 1, -1, -1, dtype=np.float64)
        signs = np.where(n % 2 == 0, 1.0, -1.0)
        return float(np.sum(signs / (2 * n + 1)))
    if kind == "euler":
        n = np.arange(n_terms, 0, -1, dtype=np.float64)
        return float(np.sum(1 / (n * n)))
    if kind == "brouncker":
        tail = 2.0
        for j in range(n_terms - 2, 0, -1):
            tail = 2 + (2 * j + 1) ** 2 / tail
        return 1.0 if n_terms == 1 else 1 + 1 / tail

    raise ValueError(
        f"Expected kind to be one of ('gregory', 'euler', 'brouncker'), got {kind!r}."
    )


def float_digits(value: float, target: float) -> float:
    """Correct decimal digits of a double precision value, capped at 16."""
    defect = abs(value - target)
    if defect == 0:
        return 16.0
    return min(16.0, -math.log10(defect / abs(target)))
