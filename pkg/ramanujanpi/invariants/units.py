import logging
from fractions import Fraction
from typing import Iterator, Tuple

import gmpy2

from ramanujanpi.core.quadratic import QuadraticSurd
from ramanujanpi.utils.arithmetic import is_square, is_squarefree

logger = logging.getLogger(__name__)

MAX_PERIOD_STEPS = 100_000


def _check_squarefree(d: int) -> None:
    if isinstance(d, bool) or not isinstance(d, int):
        raise TypeError(f"Expected d to be an integer, got {d!r}.")
    if d < 2 or not is_squarefree(d):
        raise ValueError(f"Expected d to be a square-free integer >= 2, got {d}.")


def field_discriminant(d: int) -> int:
    """Discriminant of Q(sqrt(d)): d if d = 1 (mod 4), else 4d."""
    _check_squarefree(d)
    return d if d % 4 == 1 else 4 * d


def convergents(P: int, Q: int, D: int) -> Iterator[Tuple[int, int]]:
    """Continued fraction convergents p/q of the quadratic irrational (P + sqrt(D))/Q.

    Runs the PQa recursion in exact integer arithmetic. Requires D > 0 not a perfect
    square, Q > 0 and Q | D - P^2.

    Yields
    ------
    convergent: Tuple[int, int]
        Successive (p_i, q_i), starting with the integer part.
    """
    if Q <= 0 or D <= 0 or is_square(D) or (D - P * P) % Q:
        raise ValueError(
            f"Expected Q > 0, non-square D > 0 and Q | D - P^2, got P={P}, Q={Q}, "
            f"D={D}."
        )
    root = int(gmpy2.isqrt(D))
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    while True:
        a = (P + root) // Q
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield p, q
        P = a * Q - P
        Q = (D - P * P) // Q


def fundamental_unit(d: int) -> QuadraticSurd:
    """Fundamental unit u_d > 1 of the real quadratic field Q(sqrt(d)).

    The unit is (m + n sqrt(D)) / 2 for the minimal positive solution of
    m^2 - D n^2 = +-4, D the field discriminant. It is found as the first convergent
    of the continued fraction of the ring generator with norm +-1: (1 + sqrt(d))/2
    when d = 1 (mod 4), sqrt(d) otherwise.

    Parameters
    ----------
    d: int
        Square-free integer >= 2.

    Returns
    -------
    unit: QuadraticSurd
        u_d written over sqrt(d).

    Examples
    --------
    >>> from ramanujanpi.invariants.units import fundamental_unit
    >>> str(fundamental_unit(29))
    '5/2 + 1/2*sqrt(29)'
    """
    _check_squarefree(d)
    half_integral = d % 4 == 1
    expansion = convergents(1, 2, d) if half_integral else convergents(0, 1, d)
    for step, (p, q) in enumerate(expansion):
        if half_integral:
            # p - q w' with w' = (1 - sqrt(d))/2
            norm = p * p - p * q - q * q * (d - 1) // 4
            a, b = Fraction(2 * p - q, 2), Fraction(q, 2)
        else:
            norm = p * p - d * q * q
            a, b = Fraction(p), Fraction(q)
        if abs(norm) == 1:
            logger.debug("fundamental unit of Q(sqrt(%d)) after %d steps", d, step)
            return QuadraticSurd(a, b, d)
        if step > MAX_PERIOD_STEPS:
            break

    raise ArithmeticError(f"No unit found for d = {d} within the step limit.")
