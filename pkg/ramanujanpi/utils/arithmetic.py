from fractions import Fraction
from typing import Dict

import gmpy2


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n < 1:
        raise ValueError(f"Expected a positive integer, got {n}.")
    factors = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1

    return factors


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for e in factorize(n).values())


def squarefree_kernel(n: int) -> int:
    """Square-free part of n, e.g. 18 -> 2 and 58 -> 58."""
    kernel = 1
    for p, e in factorize(n).items():
        if e % 2:
            kernel *= p

    return kernel


def is_square(n: int) -> bool:
    return n >= 0 and bool(gmpy2.is_square(n))


def positive_rational(r, name: str = "r") -> Fraction:
    """Validates an int, Fraction or "p/q" string as a positive rational."""
    if isinstance(r, bool) or not isinstance(r, (int, Fraction, str)):
        raise TypeError(f"Expected {name} to be a rational number, got {r!r}.")
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"Expected {name} to be positive, got {r}.")

    return r
