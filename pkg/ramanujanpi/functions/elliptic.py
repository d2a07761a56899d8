import logging
from typing import Tuple, Union

import mpmath

from ramanujanpi.core.modulus import Modulus, ThetaTriple
from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.utils.types import Numeric

logger = logging.getLogger(__name__)

MAX_AGM_ITERATIONS = 10_000


def _agm_iterate(
    a: mpmath.mpf, b: mpmath.mpf, ctx: PrecisionContext
) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Runs the AGM iteration and accumulates the side sum of the c-sequence.

    Returns the common limit M and S = sum_{n>=1} 2^(n-1) c_n^2 with
    c_n = (a_{n-1} - b_{n-1}) / 2.
    """
    mp = ctx.mp
    eps = ctx.eps
    side_sum = mp.zero
    weight = mp.one
    iterations = 0
    while abs(a - b) > eps * a:
        c = (a - b) / 2
        a, b = (a + b) / 2, mp.sqrt(a * b)
        side_sum += weight * c * c
        weight *= 2
        iterations += 1
        if iterations > MAX_AGM_ITERATIONS:
            raise ArithmeticError("AGM iteration did not converge.")
    logger.debug("AGM converged after %d iterations", iterations)

    return (a + b) / 2, side_sum


def _unpack(
    m: Union[Modulus, Numeric],
    ctx: PrecisionContext,
    allow_zero: bool = False,
    allow_one: bool = False,
) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Returns (k, k') for a Modulus or a bare k that may sit on a documented limit."""
    if isinstance(m, Modulus):
        return m.k, m.kprime
    k = ctx.convert(m)
    if (k == 0 and allow_zero) or (k == 1 and allow_one):
        return k, ctx.mp.sqrt((1 - k) * (1 + k))
    if not 0 < k < 1:
        lower = "[0" if allow_zero else "(0"
        upper = "1]" if allow_one else "1)"
        raise ValueError(
            f"Expected k to be in {lower}, {upper}, got {mpmath.nstr(k, 15)}."
        )

    return k, ctx.mp.sqrt((1 - k) * (1 + k))


def agm(a: Numeric, b: Numeric, ctx: PrecisionContext) -> mpmath.mpf:
    """Arithmetic-geometric mean of two positive reals.

    Parameters
    ----------
    a: Numeric
        First positive argument.
    b: Numeric
        Second positive argument.
    ctx: PrecisionContext
        Precision the iteration runs at. It stops once |a_n - b_n| falls below
        10^(-digits-guard) relative to a_n.

    Returns
    -------
    mean: mpmath.mpf
        The common limit of both sequences.

    Examples
    --------
    >>> from ramanujanpi.core.precision import PrecisionContext
    >>> from ramanujanpi.functions.elliptic import agm
    >>> ctx = PrecisionContext(30)
    >>> agm(1, 1, ctx)
    mpf('1.0')
    """
    a, b = ctx.convert(a), ctx.convert(b)
    if a <= 0 or b <= 0:
        raise ValueError(
            f"Expected agm arguments to be positive, got a = {mpmath.nstr(a, 15)} "
            f"and b = {mpmath.nstr(b, 15)}."
        )

    return _agm_iterate(a, b, ctx)[0]


def ellip_k(m: Union[Modulus, Numeric], ctx: PrecisionContext) -> mpmath.mpf:
    """Complete elliptic integral of the first kind K(k) = pi / (2 agm(1, k')).

    Parameters
    ----------
    m: Modulus or Numeric
        Modulus. A bare number k is accepted on [0, 1), with K(0) = pi/2.
    ctx: PrecisionContext
        Working precision.

    Returns
    -------
    K: mpmath.mpf
    """
    _, kprime = _unpack(m, ctx, allow_zero=True)

    return ctx.pi / (2 * _agm_iterate(ctx.mp.one, kprime, ctx)[0])


def ellip_e(m: Union[Modulus, Numeric], ctx: PrecisionContext) -> mpmath.mpf:
    """Complete elliptic integral of the second kind from the AGM side sums.

    Uses E = K (1 - k^2/2 - sum_{n>=1} 2^(n-1) c_n^2). A bare number k is accepted on
    [0, 1], with E(0) = pi/2 and E(1) = 1.
    """
    k, kprime = _unpack(m, ctx, allow_zero=True, allow_one=True)
    if kprime == 0:
        return ctx.mp.one
    mean, side_sum = _agm_iterate(ctx.mp.one, kprime, ctx)
    K = ctx.pi / (2 * mean)

    return K * (1 - k * k / 2 - side_sum)


def dK_dk(m: Union[Modulus, Numeric], ctx: PrecisionContext) -> mpmath.mpf:
    """Derivative dK/dk = (E - k'^2 K) / (k k'^2)."""
    k, kprime = _unpack(m, ctx)
    K = ellip_k(m, ctx)
    E = ellip_e(m, ctx)

    return (E - kprime**2 * K) / (k * kprime**2)


def dE_dk(m: Union[Modulus, Numeric], ctx: PrecisionContext) -> mpmath.mpf:
    """Derivative dE/dk = (E - K) / k."""
    k, _ = _unpack(m, ctx)

    return (ellip_e(m, ctx) - ellip_k(m, ctx)) / k


def legendre_defect(m: Modulus, ctx: PrecisionContext) -> mpmath.mpf:
    """Returns K E' + E K' - K K' - pi/2, which vanishes for every modulus."""
    mc = m.complement()
    K, E = ellip_k(m, ctx), ellip_e(m, ctx)
    Kp, Ep = ellip_k(mc, ctx), ellip_e(mc, ctx)

    return K * Ep + E * Kp - K * Kp - ctx.pi / 2


def ellip_k_quadrature(m: Union[Modulus, Numeric], ctx: PrecisionContext):
    """K from its defining integral by tanh-sinh quadrature. Cross-check oracle."""
    k, _ = _unpack(m, ctx, allow_zero=True)
    mp = ctx.mp

    return mp.quad(lambda t: 1 / mp.sqrt(1 - (k * mp.sin(t)) ** 2), [0, mp.pi / 2])


def ellip_e_quadrature(m: Union[Modulus, Numeric], ctx: PrecisionContext):
    """E from its defining integral by tanh-sinh quadrature. Cross-check oracle."""
    k, _ = _unpack(m, ctx, allow_zero=True, allow_one=True)
    mp = ctx.mp

    return mp.quad(lambda t: mp.sqrt(1 - (k * mp.sin(t)) ** 2), [0, mp.pi / 2])


def theta(q: Numeric, ctx: PrecisionContext) -> ThetaTriple:
    """Jacobi theta functions theta_2, theta_3, theta_4 at the nome q.

    Parameters
    ----------
    q: Numeric
        Nome in the open interval (0, 1).
    ctx: PrecisionContext
        Working precision. Each sum stops at the first term below 10^(-digits-guard);
        the terms decay like q^(n^2), so about sqrt(digits / -log10(q)) terms are
        used.

    Returns
    -------
    theta: ThetaTriple

    Notes
    -----
    The sums are evaluated as

    .. math::

        \\theta_2 = 2 q^{1/4} \\sum_{n \\ge 0} q^{n(n+1)}, \\quad
        \\theta_{3,4} = 1 + 2 \\sum_{n \\ge 1} (\\pm 1)^n q^{n^2}

    with the powers of q updated by multiplication only.
    """
    mp = ctx.mp
    q = ctx.convert(q)
    if not 0 < q < 1:
        raise ValueError(
            f"Expected q to be in the open interval (0, 1), got {mpmath.nstr(q, 15)}."
        )
    eps = ctx.eps
    q2 = q * q

    # theta_3, theta_4
    even_sum = odd_sum = mp.zero
    term, step = q, q * q2
    n = 1
    while term >= eps:
        if n % 2:
            odd_sum += term
        else:
            even_sum += term
        term *= step
        step *= q2
        n += 1
    t3 = 1 + 2 * (even_sum + odd_sum)
    t4 = 1 + 2 * (even_sum - odd_sum)

    # theta_2
    prefactor = 2 * mp.root(q, 4)
    series = mp.zero
    term, step = mp.one, q2
    while prefactor * term >= eps:
        series += term
        term *= step
        step *= q2
    t2 = prefactor * series
    logger.debug("theta sums used %d terms", n)

    return ThetaTriple(t2, t3, t4)


def nome(m: Modulus, ctx: PrecisionContext) -> mpmath.mpf:
    """Nome q = exp(-pi K'/K)."""
    return ctx.mp.exp(-ctx.pi * ellip_k(m.complement(), ctx) / ellip_k(m, ctx))


def modulus_from_nome(q: Numeric, ctx: PrecisionContext) -> Modulus:
    """Inverse of :func:`nome`: k = theta_2^2/theta_3^2 and k' = theta_4^2/theta_3^2."""
    triple = theta(q, ctx)

    return Modulus(triple.t2**2 / triple.t3**2, triple.t4**2 / triple.t3**2)


def pi_agm(ctx: PrecisionContext) -> mpmath.mpf:
    """pi from the AGM of 1 and 1/sqrt(2) and its side sums.

    This is the Legendre relation at k = k' = 1/sqrt(2) rewritten with the AGM
    expressions for K and E: pi = 4 M^2 / (1 - sum_{n>=1} 2^(n+1) c_n^2).
    """
    mp = ctx.mp
    mean, side_sum = _agm_iterate(mp.one, 1 / mp.sqrt(2), ctx)

    return 4 * mean**2 / (1 - 4 * side_sum)


def reciprocal_pi_agm(ctx: PrecisionContext) -> mpmath.mpf:
    return 1 / pi_agm(ctx)
