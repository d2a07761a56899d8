import logging
from typing import Tuple

import mpmath

from ramanujanpi.core.modulus import Modulus
from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.utils.types import Numeric

logger = logging.getLogger(__name__)


def class_invariants(
    m: Modulus, ctx: PrecisionContext
) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Ramanujan-Weber class invariants of a modulus.

    Parameters
    ----------
    m: Modulus
        Modulus k in (0, 1).
    ctx: PrecisionContext
        Working precision.

    Returns
    -------
    invariants: Tuple[mpmath.mpf, mpmath.mpf]
        The pair (G, g) with G = (1/(2 k k'))^(1/12) and g = (k'^2/(2 k))^(1/12).
    """
    mp = ctx.mp
    G = mp.root(1 / (2 * m.k * m.kprime), 12)
    g = mp.root(m.kprime**2 / (2 * m.k), 12)

    return G, g


def modulus_from_G(G: Numeric, ctx: PrecisionContext) -> Modulus:
    """Modulus with class invariant G, the root k <= 1/sqrt(2) of 2 k k' = G^-12.

    This is k = (sqrt(1 + G^-12) - sqrt(1 - G^-12)) / 2, evaluated without the
    cancellation as G^-12 / (sqrt(1 + G^-12) + sqrt(1 - G^-12)).
    """
    mp = ctx.mp
    G = ctx.convert(G)
    if G < 1:
        raise ValueError(
            f"Expected G to be at least 1 (k would be complex), got "
            f"{mpmath.nstr(G, 15)}."
        )
    inverse = G ** (-12)
    upper = mp.sqrt(1 + inverse)
    lower = mp.sqrt(1 - inverse)

    return Modulus(inverse / (upper + lower), (upper + lower) / 2)


def modulus_from_g(g: Numeric, ctx: PrecisionContext) -> Modulus:
    """Modulus with class invariant g, the positive root of k^2 + 2 g^12 k - 1 = 0.

    The root is taken as k = 1 / (g^12 + sqrt(g^24 + 1)), which keeps full relative
    precision for large g.
    """
    mp = ctx.mp
    g = ctx.convert(g)
    if g <= 0:
        raise ValueError(f"Expected g to be positive, got {mpmath.nstr(g, 15)}.")
    twelfth = g**12

    return Modulus.from_k(1 / (twelfth + mp.sqrt(twelfth**2 + 1)), ctx)


def klein_j(m: Modulus, ctx: PrecisionContext) -> mpmath.mpf:
    """Klein's absolute invariant J, computed three ways.

    The G-form (4 G^24 - 1)^3 / (27 G^24), the g-form (4 g^24 + 1)^3 / (27 g^24) and
    the k-form 4 (1 - k^2 k'^2)^3 / (27 k^4 k'^4) must agree to 10^(-digits+4) in
    relative terms. The k-form value is returned.

    Raises
    ------
    ArithmeticError
        If the three forms disagree beyond tolerance.
    """
    G, g = class_invariants(m, ctx)
    G24 = G**24
    g24 = g**24
    product = (m.k * m.kprime) ** 2
    from_G = (4 * G24 - 1) ** 3 / (27 * G24)
    from_g = (4 * g24 + 1) ** 3 / (27 * g24)
    from_k = 4 * (1 - product) ** 3 / (27 * product**2)

    tolerance = ctx.tolerance(4) * abs(from_k)
    spread = max(abs(from_G - from_k), abs(from_g - from_k))
    logger.debug("klein_j forms spread %s", mpmath.nstr(spread, 5))
    if spread > tolerance:
        raise ArithmeticError(
            f"Klein J formulas disagree by {mpmath.nstr(spread, 5)} at "
            f"k = {mpmath.nstr(m.k, 15)}."
        )

    return from_k


def x_invariant(m: Modulus, ctx: PrecisionContext) -> mpmath.mpf:
    """x = 2 / (g^12 + g^-12), the base of the x-family series."""
    _, g = class_invariants(m, ctx)
    g12 = g**12

    return 2 / (g12 + 1 / g12)


def y_invariant(m: Modulus, ctx: PrecisionContext) -> mpmath.mpf:
    """y = 2 / (G^12 - G^-12), the base of the y-family series. Requires G > 1."""
    G, _ = class_invariants(m, ctx)
    G12 = G**12
    if not G12 > 1:
        raise ValueError(
            f"Expected G > 1 (k < 1/sqrt(2)) for the y invariant, got "
            f"k = {mpmath.nstr(m.k, 15)}."
        )

    return 2 / (G12 - 1 / G12)


def g4n_invariant(m: Modulus, ctx: PrecisionContext) -> mpmath.mpf:
    """g_4N = 2^(1/4) g_N G_N, computed from g_4N^12 = 2 k' / k^2."""
    return ctx.mp.root(2 * m.kprime / m.k**2, 12)
