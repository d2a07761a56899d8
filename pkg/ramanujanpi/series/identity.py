import logging
from typing import Tuple

import mpmath

from ramanujanpi.core.definitions import series_families
from ramanujanpi.core.modulus import Modulus
from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.series import CoefficientFamily
from ramanujanpi.core.singular import SingularData
from ramanujanpi.functions.elliptic import dK_dk, ellip_k
from ramanujanpi.functions.hypergeometric import hyp_3f2
from ramanujanpi.invariants.classinv import (
    g4n_invariant,
    klein_j,
    x_invariant,
    y_invariant,
)
from ramanujanpi.invariants.singular import alpha, lambda_star
from ramanujanpi.series.builder import check_family

logger = logging.getLogger(__name__)


def reciprocal_pi_identity_check(
    data: SingularData, family_tag: str, ctx: PrecisionContext
) -> mpmath.mpf:
    """Defect of the closed form for 1/pi at the singular modulus, without any series.

    Evaluates

        sqrt(r) k k'^2 (2/pi)^2 K dK/dk + (alpha(r) - sqrt(r) k^2) ((2/pi) K)^2

    at k = lambda*(r), r = N, with K and dK/dk from the AGM and alpha(r) from
    elliptic integrals, and returns its distance to 1/pi.

    Parameters
    ----------
    data: SingularData
        Table row providing N.
    family_tag: str
        Series family the identity is checked for; N must lie in its range.
    ctx: PrecisionContext
        Working precision.

    Returns
    -------
    defect: mpmath.mpf
        Expected to be at most 10^(-digits+6).
    """
    check_family(family_tag, data.N)
    mp = ctx.mp
    m = lambda_star(data.N, ctx)
    root_r = mp.sqrt(ctx.convert(data.N))
    K = ellip_k(m, ctx)
    scaled = 2 * K / ctx.pi

    value = (
        root_r * m.k * m.kprime**2 * (2 / ctx.pi) ** 2 * K * dK_dk(m, ctx)
        + (alpha(data.N, ctx) - root_r * m.k**2) * scaled**2
    )
    defect = abs(value - 1 / ctx.pi)
    logger.debug(
        "closed form at %s (%s): defect %s",
        data.label,
        family_tag,
        mpmath.nstr(defect, 5),
    )

    return defect


def family_representation(
    family_tag: str, m: Modulus, ctx: PrecisionContext
) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """(multiplier, argument) with ((2/pi) K)^2 = multiplier 3F2(...; argument).

    The 3F2 parameters are those of the family's coefficients, with lower
    parameters 1, 1.
    """
    mp = ctx.mp
    k, kprime = m.k, m.kprime
    if family_tag == "G":
        return mp.one, (2 * k * kprime) ** 2
    if family_tag == "g":
        return 1 / kprime**2, -((2 * k / kprime**2) ** 2)
    if family_tag == "g4N":
        return 1 / kprime, -(g4n_invariant(m, ctx) ** (-24))
    if family_tag == "xN":
        return 1 / (1 + k**2), x_invariant(m, ctx) ** 2
    if family_tag == "yN":
        return 1 / (kprime**2 - k**2), -(y_invariant(m, ctx) ** 2)
    if family_tag == "JN":
        return 1 / mp.sqrt(1 - (k * kprime) ** 2), 1 / klein_j(m, ctx)

    raise ValueError(
        f"Expected familyTag to be one of {list(series_families)}, got "
        f"{family_tag!r}."
    )


def representation_defect(
    data: SingularData, family_tag: str, ctx: PrecisionContext
) -> mpmath.mpf:
    """|multiplier 3F2(argument) - ((2/pi) K)^2| at k = lambda*(N) for a family.

    This is the hypergeometric form of ((2/pi) K)^2 the family's series is derived
    from; the 3F2 is summed as a series, unlike in
    :func:`reciprocal_pi_identity_check`.
    """
    check_family(family_tag, data.N)
    m = lambda_star(data.N, ctx)
    multiplier, argument = family_representation(family_tag, m, ctx)
    family = CoefficientFamily(series_families[family_tag]["coefficients"])
    a1, a2, a3 = family.pochhammer
    value = multiplier * hyp_3f2(a1, a2, a3, 1, 1, argument, ctx)

    return abs(value - (2 * ellip_k(m, ctx) / ctx.pi) ** 2)
