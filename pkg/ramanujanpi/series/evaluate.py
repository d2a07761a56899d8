import logging
import math
import time
from collections import deque
from typing import Iterator

import mpmath

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.series import EvaluationReport, SeriesSpec
from ramanujanpi.series.elementary import (
    estimated_elementary_terms,
    evaluate_elementary,
)

logger = logging.getLogger(__name__)

# tail ratio bound is the largest recent ratio plus 10%
RATIO_MARGIN = 1.1
RATIO_WINDOW = 3
RATE_WINDOW = 5
# precision used for convergence rate diagnostics
RATE_DIGITS = 30


def _require_geometric(spec: SeriesSpec) -> None:
    if not spec.is_geometric:
        raise TypeError(
            f"Expected a geometric series spec, got {spec.key!r} of kind "
            f"{spec.kind!r}."
        )


def _terms(spec: SeriesSpec, ctx: PrecisionContext) -> Iterator[mpmath.mpf]:
    """Yields t_n = a_n (A + n B) w^n without the folded multiplier, n = 0, 1, ..."""
    _, A, B, w = spec.numeric_fields(ctx)
    family = spec.family
    if family.is_hypergeometric:
        coefficients = None
        a = ctx.mp.one
    else:
        coefficients = family.coefficients()

    power = ctx.mp.one
    n = 0
    while True:
        if coefficients is not None:
            a = ctx.convert(next(coefficients))
        yield a * (A + n * B) * power
        if coefficients is None:
            a *= ctx.convert(family.ratio(n))
        power *= w
        n += 1


def digits_per_term(spec: SeriesSpec) -> float:
    """Asymptotic decimal digits gained per term, -log10 of the limit term ratio.

    The limit of |t_{n+1}/t_n| is s |z|^slope L, with s the scale, slope the
    growth of the base exponent per index and L the coefficient family's limit
    ratio.

    Parameters
    ----------
    spec: SeriesSpec
        Geometric spec.

    Returns
    -------
    digits: float

    Raises
    ------
    TypeError
        For elementary specs, which converge sublinearly.

    Examples
    --------
    >>> from ramanujanpi.series.catalog import get_spec
    >>> from ramanujanpi.series.evaluate import digits_per_term
    >>> round(digits_per_term(get_spec("ramanujan58")), 2)
    7.98
    """
    _require_geometric(spec)
    ctx = PrecisionContext(RATE_DIGITS)
    z = abs(ctx.convert(spec.base))
    ratio = spec.scale * z**spec.slope * ctx.convert(spec.family.limit_ratio)
    if not 0 < ratio < 1:
        raise ValueError(
            f"Expected a limit term ratio in (0, 1) for {spec.key!r}, got "
            f"{mpmath.nstr(ratio, 15)}."
        )

    return float(-ctx.mp.log10(ratio))


def measured_digits_per_term(
    spec: SeriesSpec, ctx: PrecisionContext, start: int = 10, stop: int = 15
) -> float:
    """Mean of -log10|t_{n+1}/t_n| over start <= n < stop."""
    _require_geometric(spec)
    if not 0 <= start < stop:
        raise ValueError(
            f"Expected 0 <= start < stop, got start = {start} and stop = {stop}."
        )
    mp = ctx.mp
    terms = _terms(spec, ctx)
    values = [next(terms) for _ in range(stop + 1)]
    rates = [
        -mp.log10(abs(values[n + 1] / values[n])) for n in range(start, stop)
    ]

    return float(mp.fsum(rates) / len(rates))


def estimated_terms(spec: SeriesSpec, digits: int) -> int:
    """Terms needed to reach 10^(-digits), from the asymptotic rate.

    Elementary specs need on the order of 10^digits terms.
    """
    if not spec.is_geometric:
        return estimated_elementary_terms(spec.kind, digits)

    return math.ceil(digits / digits_per_term(spec)) + 1


def _sum_geometric(spec: SeriesSpec, ctx: PrecisionContext, n_terms, max_terms):
    mp = ctx.mp
    folded = abs(spec.numeric_fields(ctx)[0])
    limit = RATIO_MARGIN * mp.mpf(10) ** (-digits_per_term(spec))
    eps = ctx.eps

    terms = _terms(spec, ctx)
    term = next(terms)
    total = mp.zero
    ratios = deque(maxlen=RATIO_WINDOW)
    rates = deque(maxlen=RATE_WINDOW)
    n = 0
    while True:
        total += term
        n += 1
        following = next(terms)
        ratio = abs(following / term) if term else None
        if ratio is not None:
            ratios.append(ratio)
        ratio_bound = max([RATIO_MARGIN * r for r in ratios] + [limit])
        bound = (
            folded * abs(following) / (1 - ratio_bound) if ratio_bound < 1 else mp.inf
        )
        if n_terms is not None:
            if n >= n_terms:
                break
        elif bound < eps:
            break
        elif n >= max_terms:
            raise ArithmeticError(
                f"{spec.key!r} did not reach the tail bound within {max_terms} terms."
            )
        if ratio is not None:
            rates.append(-mp.log10(ratio))
        term = following

    rate = float(mp.fsum(rates) / len(rates)) if rates else None

    return total, n, bound, rate


def evaluate_direct(
    spec: SeriesSpec,
    ctx: PrecisionContext,
    n_terms: int = None,
    max_terms: int = None,
) -> EvaluationReport:
    """Sums a series term by term at working precision.

    Geometric specs are summed until the tail bound falls below 10^(-digits-guard).
    The tail after the last summed term t_{N-1} is bounded by |t_N| / (1 - r) with r
    the largest of the last three term ratios (and of the asymptotic ratio), plus
    10%. Coefficients are advanced by their exact rational ratio. Elementary specs
    dispatch to :mod:`ramanujanpi.series.elementary`.

    Parameters
    ----------
    spec: SeriesSpec
        Catalog or built spec.
    ctx: PrecisionContext
        Working precision.
    n_terms: int, optional
        Sum exactly this many terms instead of summing to the tail bound.
    max_terms: int, optional
        Largest number of terms summed before giving up, defaults to twice the
        estimate from the asymptotic rate plus 100.

    Returns
    -------
    report: EvaluationReport
        Value, terms used, tail bound and the mean -log10|t_{n+1}/t_n| over the last
        five summed terms.

    Raises
    ------
    ValueError
        If |z| >= 1, or if an elementary spec would need more terms than the budget.

    Examples
    --------
    >>> import mpmath
    >>> from ramanujanpi.core.precision import PrecisionContext
    >>> from ramanujanpi.series.catalog import get_spec
    >>> from ramanujanpi.series.evaluate import evaluate_direct
    >>> report = evaluate_direct(get_spec("ramanujan58"), PrecisionContext(50))
    >>> mpmath.nstr(report.pi_value(), 20)
    '3.1415926535897932385'
    """
    if n_terms is not None and n_terms < 1:
        raise ValueError(f"Expected n_terms to be positive, got {n_terms}.")
    started = time.perf_counter()

    if not spec.is_geometric:
        value, used, bound = evaluate_elementary(spec, ctx, n_terms)
        rate = None
    else:
        if max_terms is None:
            max_terms = 2 * estimated_terms(spec, ctx.working_digits) + 100
        total, used, bound, rate = _sum_geometric(spec, ctx, n_terms, max_terms)
        value = spec.numeric_fields(ctx)[0] * total
    seconds = time.perf_counter() - started
    logger.debug(
        "%s: %d terms, tail bound %s", spec.key, used, mpmath.nstr(bound, 5)
    )

    return EvaluationReport(
        key=spec.key,
        value=value,
        terms_used=used,
        error_bound=bound,
        digits_per_term=rate,
        target=spec.target,
        method="direct",
        seconds=seconds,
    )
