import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List

import mpmath

from ramanujanpi.core.modulus import Modulus
from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.functions.elliptic import ellip_k
from ramanujanpi.functions.hypergeometric import hyp_2f1, hyp_3f2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityDefect:
    """Absolute difference between both sides of one named identity."""

    name: str
    defect: mpmath.mpf


@dataclass(frozen=True)
class _Identity:
    name: str
    valid_range: str
    in_range: Callable[[mpmath.mpf], bool]
    lhs_squared: bool
    rhs: Callable[[], mpmath.mpf]


def check_transformations(m: Modulus, ctx: PrecisionContext) -> List[IdentityDefect]:
    """Checks the hypergeometric representations of (2/pi)K and ((2/pi)K)^2.

    Twelve identities are covered: the quadratic 2F1 form and its Clausen 3F2 square
    for k in [0, 1/sqrt(2)], and five alternate representations of each of (2/pi)K
    and ((2/pi)K)^2 built on the arguments -(2k/k'^2)^2, -(k^2/(2k'))^2,
    (2/(g^12 + g^-12))^2, -(2/(G^12 - G^-12))^2 and 1/J. Each identity is evaluated
    only when k lies in its own validity range. The 1/J representations and the
    quadratic ones include k = 1/sqrt(2), where 2F1 and 3F2 are summed at z = 1; the
    other alternate representations are checked strictly inside their ranges.

    Parameters
    ----------
    m: Modulus
        Modulus to check the identities at.
    ctx: PrecisionContext
        Working precision.

    Returns
    -------
    defects: list of IdentityDefect
        |LHS - RHS| for every identity whose range contains k, in a fixed order.
    """
    mp = ctx.mp
    k, kp = m.k, m.kprime
    P = k * kp
    G12 = 1 / (2 * P)
    g12 = kp**2 / (2 * k)
    J = mp.mpf(4) / 27 * (1 - P**2) ** 3 / P**4
    root2 = mp.sqrt(2)
    q1, q3, h = Fraction(1, 4), Fraction(3, 4), Fraction(1, 2)
    e1, e3 = Fraction(1, 8), Fraction(3, 8)
    t1, t5 = Fraction(1, 12), Fraction(5, 12)
    s1, s5 = Fraction(1, 6), Fraction(5, 6)

    z_quadratic = (2 * P) ** 2
    z_1 = -((2 * k / kp**2) ** 2)
    z_2 = -((k**2 / (2 * kp)) ** 2)
    z_3 = (2 / (g12 + 1 / g12)) ** 2

    def z_4():
        return -((2 / (G12 - 1 / G12)) ** 2)

    z_5 = 1 / J

    def below(bound):
        return lambda x: x < bound

    def at_most(bound):
        return lambda x: x <= bound

    range_1 = below(root2 - 1)
    range_2 = below(mp.sqrt(2 * (root2 - 1)))
    range_4 = below((1 - mp.sqrt(root2 - 1)) / mp.mpf(2) ** (mp.mpf(3) / 4))
    range_5 = at_most(1 / root2)
    text_1 = "k in [0, sqrt(2)-1)"
    text_2 = "k^2 in [0, 2(sqrt(2)-1))"
    text_4 = "k in [0, (1-sqrt(sqrt(2)-1))/2^(3/4))"
    text_5 = "k in [0, 1/sqrt(2)]"

    identities = [
        _Identity(
            "2F1(1/4,1/4;1;(2kk')^2)",
            "k in [0, 1/sqrt(2)]",
            at_most(1 / root2),
            False,
            lambda: hyp_2f1(q1, q1, 1, z_quadratic, ctx),
        ),
        _Identity(
            "3F2(1/2,1/2,1/2;1,1;(2kk')^2)",
            "k in [0, 1/sqrt(2)]",
            at_most(1 / root2),
            True,
            lambda: hyp_3f2(h, h, h, 1, 1, z_quadratic, ctx),
        ),
        _Identity(
            "2F1(1/4,1/4;1;-(2k/k'^2)^2)/k'",
            text_1,
            range_1,
            False,
            lambda: hyp_2f1(q1, q1, 1, z_1, ctx) / kp,
        ),
        _Identity(
            "2F1(1/4,1/4;1;-(k^2/(2k'))^2)/sqrt(k')",
            text_2,
            range_2,
            False,
            lambda: hyp_2f1(q1, q1, 1, z_2, ctx) / mp.sqrt(kp),
        ),
        _Identity(
            "2F1(1/8,3/8;1;(2/(g^12+g^-12))^2)/sqrt(1+k^2)",
            text_1,
            range_1,
            False,
            lambda: hyp_2f1(e1, e3, 1, z_3, ctx) / mp.sqrt(1 + k**2),
        ),
        _Identity(
            "2F1(1/8,3/8;1;-(2/(G^12-G^-12))^2)/sqrt(k'^2-k^2)",
            text_4,
            range_4,
            False,
            lambda: hyp_2f1(e1, e3, 1, z_4(), ctx) / mp.sqrt(kp**2 - k**2),
        ),
        _Identity(
            "2F1(1/12,5/12;1;1/J)/(1-(kk')^2)^(1/4)",
            text_5,
            range_5,
            False,
            lambda: hyp_2f1(t1, t5, 1, z_5, ctx) / mp.root(1 - P**2, 4),
        ),
        _Identity(
            "3F2(1/2,1/2,1/2;1,1;-(2k/k'^2)^2)/k'^2",
            text_1,
            range_1,
            True,
            lambda: hyp_3f2(h, h, h, 1, 1, z_1, ctx) / kp**2,
        ),
        _Identity(
            "3F2(1/2,1/2,1/2;1,1;-(k^2/(2k'))^2)/k'",
            text_2,
            range_2,
            True,
            lambda: hyp_3f2(h, h, h, 1, 1, z_2, ctx) / kp,
        ),
        _Identity(
            "3F2(1/4,3/4,1/2;1,1;(2/(g^12+g^-12))^2)/(1+k^2)",
            text_1,
            range_1,
            True,
            lambda: hyp_3f2(q1, q3, h, 1, 1, z_3, ctx) / (1 + k**2),
        ),
        _Identity(
            "3F2(1/4,3/4,1/2;1,1;-(2/(G^12-G^-12))^2)/(k'^2-k^2)",
            text_4,
            range_4,
            True,
            lambda: hyp_3f2(q1, q3, h, 1, 1, z_4(), ctx) / (kp**2 - k**2),
        ),
        _Identity(
            "3F2(1/6,5/6,1/2;1,1;1/J)/sqrt(1-(kk')^2)",
            text_5,
            range_5,
            True,
            lambda: hyp_3f2(s1, s5, h, 1, 1, z_5, ctx) / mp.sqrt(1 - P**2),
        ),
    ]

    applicable = [identity for identity in identities if identity.in_range(k)]
    if not applicable:
        ranges = sorted({identity.valid_range for identity in identities})
        raise ValueError(
            f"Expected k to lie in at least one of the ranges {ranges}, got "
            f"k = {mpmath.nstr(k, 15)}."
        )

    scaled_K = 2 * ellip_k(m, ctx) / ctx.pi
    defects = []
    for identity in applicable:
        lhs = scaled_K**2 if identity.lhs_squared else scaled_K
        defect = abs(lhs - identity.rhs())
        logger.debug("%s: defect %s", identity.name, mpmath.nstr(defect, 5))
        defects.append(IdentityDefect(identity.name, defect))

    return defects
