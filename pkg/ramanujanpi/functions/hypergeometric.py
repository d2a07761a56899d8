import logging
import warnings
from fractions import Fraction
from itertools import permutations
from typing import List, Sequence

import mpmath

from ramanujanpi.core.modulus import Modulus
from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.utils.types import Numeric, Rational

logger = logging.getLogger(__name__)

MAX_SERIES_TERMS = 10**7


def _as_parameters(values: Sequence[Rational], name: str) -> List[Fraction]:
    parameters = []
    for value in values:
        try:
            parameters.append(Fraction(value))
        except (TypeError, ValueError):
            raise TypeError(
                f"Expected {name} parameters to be rationals, got {value!r}."
            )
    return parameters


def _check_denominators(denominators: Sequence[Fraction]) -> None:
    for b in denominators:
        if b.denominator == 1 and b <= 0:
            raise ValueError(
                f"Expected lower parameters not to be non-positive integers, got {b}."
            )


def _hyper_sum(
    numerators: List[Fraction],
    denominators: List[Fraction],
    z: mpmath.mpf,
    ctx: PrecisionContext,
) -> mpmath.mpf:
    """Partial sums of pFq (p = q + 1) with the Pochhammer ratio recurrence.

    The loop stops once the geometric tail bound |t_n| rho / (1 - rho) is below
    10^(-digits-guard), where rho bounds all later term ratios.
    """
    mp = ctx.mp
    if z == 0:
        return mp.one
    a_s = [ctx.convert(a) for a in numerators]
    b_s = [ctx.convert(b) for b in denominators]
    # past this index every factor (n + a) / (n + b) is monotone in n
    stable_from = int(max(abs(p) for p in numerators + denominators)) + 2
    absz = abs(z)
    eps = ctx.eps

    total = term = mp.one
    n = 0
    while True:
        numerator = z
        for a in a_s:
            numerator *= a + n
        denominator = mp.mpf(n + 1)
        for b in b_s:
            denominator *= b + n
        ratio = numerator / denominator
        term *= ratio
        n += 1
        if term == 0:
            break
        total += term
        if n >= stable_from:
            rho = max(abs(ratio), absz)
            if rho < 1 and abs(term) * rho / (1 - rho) < eps:
                break
        if n > MAX_SERIES_TERMS:
            raise ArithmeticError(
                f"Hypergeometric series did not converge within {MAX_SERIES_TERMS} "
                f"terms at z = {mpmath.nstr(z, 15)}."
            )
    logger.debug("hypergeometric series summed with %d terms", n)

    return total


def _prepare_argument(z: Numeric, ctx: PrecisionContext) -> mpmath.mpf:
    z = ctx.convert(z)
    if z != 1 and abs(z - 1) <= ctx.tolerance():
        warnings.warn(
            f"Argument z = {mpmath.nstr(z, 20)} is within working precision of 1 and "
            f"is evaluated at z = 1.",
            category=RuntimeWarning,
        )
        z = ctx.mp.one
    if abs(z) > 1 or z == -1:
        raise ValueError(
            f"Expected |z| < 1 (or z = 1 for convergent series), got "
            f"z = {mpmath.nstr(z, 15)}."
        )
    return z


def hyp_2f1(
    a: Rational, b: Rational, c: Rational, z: Numeric, ctx: PrecisionContext
) -> mpmath.mpf:
    """Gauss hypergeometric series 2F1(a, b; c; z) for rational parameters.

    Parameters
    ----------
    a, b, c: Rational
        Parameters, given as ints, Fractions or strings like ``"1/4"``. c must not be
        a non-positive integer.
    z: Numeric
        Argument with |z| < 1. At z = 1 the value is given by Gauss's summation
        theorem when c - a - b > 0.
    ctx: PrecisionContext
        Working precision.

    Returns
    -------
    value: mpmath.mpf

    Examples
    --------
    >>> from ramanujanpi.core.precision import PrecisionContext
    >>> from ramanujanpi.functions.hypergeometric import hyp_2f1
    >>> hyp_2f1("1/2", "1/2", 1, 0, PrecisionContext(20))
    mpf('1.0')
    """
    (a, b), (c,) = _as_parameters((a, b), "upper"), _as_parameters((c,), "lower")
    _check_denominators([c])
    z = _prepare_argument(z, ctx)
    if z == 1:
        if c - a - b <= 0:
            raise ValueError(
                f"Expected c - a - b > 0 for a convergent series at z = 1, got "
                f"{c - a - b}."
            )
        mp = ctx.mp
        ca, cb, cab = (ctx.convert(x) for x in (c - a, c - b, c - a - b))
        return mp.gamma(ctx.convert(c)) * mp.gamma(cab) / (mp.gamma(ca) * mp.gamma(cb))

    return _hyper_sum([a, b], [c], z, ctx)


def _dixon(numerators: List[Fraction], denominators: List[Fraction], ctx):
    """3F2 at z = 1 by Dixon's theorem for well-poised parameter sets, else None."""
    mp = ctx.mp
    for a, b, c in permutations(numerators):
        if sorted(denominators) == sorted([1 + a - b, 1 + a - c]):
            if a / 2 - b - c <= -1:
                continue
            g = mp.gamma
            a_, b_, c_ = (ctx.convert(x) for x in (a, b, c))
            return (
                g(1 + a_ / 2)
                * g(1 + a_ - b_)
                * g(1 + a_ - c_)
                * g(1 + a_ / 2 - b_ - c_)
                / (
                    g(1 + a_)
                    * g(1 + a_ / 2 - b_)
                    * g(1 + a_ / 2 - c_)
                    * g(1 + a_ - b_ - c_)
                )
            )
    return None


def _clausen(numerators: List[Fraction], denominators: List[Fraction], ctx):
    """3F2(2a, 2b, a+b; 2a+2b, a+b+1/2; 1) = 2F1(a, b; a+b+1/2; 1)^2, else None."""
    half = Fraction(1, 2)
    for p, q, s in permutations(numerators):
        a, b = p / 2, q / 2
        if s != a + b:
            continue
        if sorted(denominators) == sorted([p + q, s + half]):
            return hyp_2f1(a, b, s + half, 1, ctx) ** 2
    return None


def hyp_3f2(
    a1: Rational,
    a2: Rational,
    a3: Rational,
    b1: Rational,
    b2: Rational,
    z: Numeric,
    ctx: PrecisionContext,
) -> mpmath.mpf:
    """Generalized hypergeometric series 3F2(a1, a2, a3; b1, b2; z).

    Summed for |z| < 1 exactly like :func:`hyp_2f1`. At z = 1 well-poised
    parameter sets are evaluated by Dixon's theorem and squares of a 2F1 by Clausen's
    formula; other parameter sets raise.
    """
    numerators = _as_parameters((a1, a2, a3), "upper")
    denominators = _as_parameters((b1, b2), "lower")
    _check_denominators(denominators)
    z = _prepare_argument(z, ctx)
    if z == 1:
        if sum(denominators) - sum(numerators) <= 0:
            raise ValueError(
                f"Expected b1 + b2 - a1 - a2 - a3 > 0 for a convergent series at "
                f"z = 1, got {sum(denominators) - sum(numerators)}."
            )
        value = _dixon(numerators, denominators, ctx)
        if value is None:
            value = _clausen(numerators, denominators, ctx)
        if value is None:
            raise ValueError(
                "3F2 at z = 1 is only implemented for well-poised parameter sets "
                "and Clausen squares."
            )
        return value

    return _hyper_sum(numerators, denominators, z, ctx)


def ellip_k_hypergeometric(m: Modulus, ctx: PrecisionContext) -> mpmath.mpf:
    """K as (pi/2) 2F1(1/2, 1/2; 1; k^2). Cross-check oracle for the AGM route."""
    half = Fraction(1, 2)

    return ctx.pi / 2 * hyp_2f1(half, half, 1, m.k**2, ctx)


def kummer_defect(
    a: Rational, b: Rational, z: Numeric, ctx: PrecisionContext
) -> mpmath.mpf:
    """Returns 2F1(2a, 2b; a+b+1/2; z) - 2F1(a, b; a+b+1/2; 4z(1-z)) for z < 1/2."""
    a, b = Fraction(a), Fraction(b)
    c = a + b + Fraction(1, 2)
    z = ctx.convert(z)

    return hyp_2f1(2 * a, 2 * b, c, z, ctx) - hyp_2f1(a, b, c, 4 * z * (1 - z), ctx)


def clausen_defect(m: Modulus, ctx: PrecisionContext) -> mpmath.mpf:
    """Returns 2F1(1/4, 1/4; 1; x)^2 - 3F2(1/2, 1/2, 1/2; 1, 1; x), x = (2kk')^2."""
    x = (2 * m.k * m.kprime) ** 2
    quarter, half = Fraction(1, 4), Fraction(1, 2)

    return hyp_2f1(quarter, quarter, 1, x, ctx) ** 2 - hyp_3f2(
        half, half, half, 1, 1, x, ctx
    )
