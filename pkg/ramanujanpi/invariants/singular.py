import logging
from typing import Union

import mpmath

from ramanujanpi.core.modulus import Modulus
from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.surd import SurdExpr, as_surd
from ramanujanpi.functions.elliptic import ellip_e, ellip_k, modulus_from_nome
from ramanujanpi.utils.arithmetic import positive_rational
from ramanujanpi.utils.types import Rational

logger = logging.getLogger(__name__)


def surd_eval(e: Union[SurdExpr, str], ctx: PrecisionContext) -> mpmath.mpf:
    """Evaluates a SurdExpr tree (or its text notation) at working precision.

    Raises
    ------
    ValueError
        If a radicand evaluates negative.
    ZeroDivisionError
        If a divisor evaluates to zero.
    """
    return as_surd(e).evaluate(ctx)


def lambda_star(r: Rational, ctx: PrecisionContext) -> Modulus:
    """Singular modulus lambda*(r), the modulus at nome exp(-pi sqrt(r)).

    Parameters
    ----------
    r: Rational
        Positive rational index.
    ctx: PrecisionContext
        Working precision.

    Returns
    -------
    modulus: Modulus
        The modulus k with K'(k)/K(k) = sqrt(r), computed from theta functions.
    """
    r = positive_rational(r)
    mp = ctx.mp
    q = mp.exp(-ctx.pi * mp.sqrt(ctx.convert(r)))

    return modulus_from_nome(q, ctx)


def singular_ratio_defect(r: Rational, ctx: PrecisionContext) -> mpmath.mpf:
    """K'/K - sqrt(r) at lambda*(r), the check that the theta route hit the root."""
    r = positive_rational(r)
    m = lambda_star(r, ctx)

    return ellip_k(m.complement(), ctx) / ellip_k(m, ctx) - ctx.mp.sqrt(
        ctx.convert(r)
    )


def alpha(r: Rational, ctx: PrecisionContext) -> mpmath.mpf:
    """Singular value function of the second kind.

    Evaluates alpha(r) = E'/K - pi / (4 K^2) at k = lambda*(r), together with the
    Legendre-rearranged form pi / (4 K^2) - sqrt(r) (E/K - 1).

    Raises
    ------
    ArithmeticError
        If the two forms disagree by more than 10^(-digits+4).
    """
    r = positive_rational(r)
    mp = ctx.mp
    m = lambda_star(r, ctx)
    K = ellip_k(m, ctx)
    E = ellip_e(m, ctx)
    E_prime = ellip_e(m.complement(), ctx)
    pi_term = ctx.pi / (4 * K**2)

    direct = E_prime / K - pi_term
    rearranged = pi_term - mp.sqrt(ctx.convert(r)) * (E / K - 1)
    spread = abs(direct - rearranged)
    logger.debug("alpha(%s) forms spread %s", r, mpmath.nstr(spread, 5))
    if spread > ctx.tolerance(4):
        raise ArithmeticError(
            f"alpha({r}) forms disagree by {mpmath.nstr(spread, 5)}."
        )

    return direct


def alpha_convergence_bound(r: Rational, ctx: PrecisionContext) -> mpmath.mpf:
    """The bound 16 sqrt(r) exp(-pi sqrt(r)) on alpha(r) - 1/pi."""
    mp = ctx.mp
    root = mp.sqrt(ctx.convert(positive_rational(r)))

    return 16 * root * mp.exp(-ctx.pi * root)


def alpha_convergence_check(r: Rational, ctx: PrecisionContext) -> mpmath.mpf:
    """Returns alpha(r) - 1/pi, which lies in (0, 16 sqrt(r) exp(-pi sqrt(r))].

    Requires r >= 1.
    """
    r = positive_rational(r)
    if r < 1:
        raise ValueError(f"Expected r to be at least 1, got {r}.")

    return alpha(r, ctx) - 1 / ctx.pi
