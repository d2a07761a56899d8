import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
from mpmath.ctx_mp import MPContext

from ramanujanpi.settings import DEFAULT_GUARD, GUARD_SCALING_THRESHOLD, MIN_DIGITS
from ramanujanpi.utils.types import Numeric

_local = threading.local()


def _context_for(dps: int) -> MPContext:
    """Returns the calling thread's mpmath context at `dps` decimal digits."""
    contexts = getattr(_local, "contexts", None)
    if contexts is None:
        contexts = _local.contexts = {}
    mp = contexts.get(dps)
    if mp is None:
        mp = MPContext()
        mp.dps = dps
        contexts[dps] = mp

    return mp


@dataclass(frozen=True)
class PrecisionContext:
    """Working decimal precision plus guard-digit policy. Core class of ramanujanpi.

    Every numeric operation of the package receives a PrecisionContext and computes
    in an mpmath context of ``digits + guard`` decimal digits. Contexts are created
    per thread, so no operation touches mpmath's global ``mp`` object.

    Parameters
    ----------
    digits: int
        Decimal digits the results are accurate to. Must be at least 16.
    guard: int, optional
        Extra guard digits carried internally, defaults to 10. Above 10^4 digits, the
        guard is raised to ``ceil(log10(digits)) + 10`` if that is larger.

    Examples
    --------
    >>> from ramanujanpi.core.precision import PrecisionContext
    >>> ctx = PrecisionContext(50)
    >>> ctx.working_digits
    60
    >>> ctx.convert("1/4")
    mpf('0.25')
    """

    digits: int
    guard: int = DEFAULT_GUARD

    def __post_init__(self):
        if isinstance(self.digits, bool) or not isinstance(self.digits, int):
            raise TypeError(f"Expected digits to be an integer, got {self.digits!r}.")
        if self.digits < MIN_DIGITS:
            raise ValueError(
                f"Expected digits to be at least {MIN_DIGITS}, got {self.digits}."
            )
        if self.guard < 0:
            raise ValueError(f"Expected guard to be non-negative, got {self.guard}.")

    def __str__(self):
        return (
            f"ramanujanpi PrecisionContext object ({self.digits} digits, "
            f"{self.effective_guard} guard digits)"
        )

    @property
    def effective_guard(self) -> int:
        if self.digits > GUARD_SCALING_THRESHOLD:
            return max(self.guard, math.ceil(math.log10(self.digits)) + 10)
        return self.guard

    @property
    def working_digits(self) -> int:
        return self.digits + self.effective_guard

    @property
    def mp(self) -> MPContext:
        """mpmath context at working precision, private to the calling thread."""
        return _context_for(self.working_digits)

    @property
    def eps(self) -> mpmath.mpf:
        """Truncation threshold 10^(-digits-guard) for series and iterations."""
        return self.mp.mpf(10) ** (-self.working_digits)

    @property
    def pi(self) -> mpmath.mpf:
        return +self.mp.pi

    def tolerance(self, slack: int = 0) -> mpmath.mpf:
        """Returns the acceptance tolerance 10^(-digits+slack)."""
        return self.mp.mpf(10) ** (slack - self.digits)

    def extend(self, extra: int) -> "PrecisionContext":
        """Returns a context with `extra` additional digits and the same guard."""
        return PrecisionContext(self.digits + extra, self.guard)

    def convert(self, x) -> mpmath.mpf:
        """Converts a number, an exact rational, a rational string like ``"1/4"``, or
        any object with an ``evaluate(ctx)`` method to an mpf at working precision.
        """
        mp = self.mp
        if hasattr(x, "evaluate"):
            return x.evaluate(self)
        if isinstance(x, Fraction):
            return mp.mpf(x.numerator) / x.denominator
        if isinstance(x, str) and "/" in x:
            return self.convert(Fraction(x))
        if isinstance(x, np.number):
            x = x.item()

        return mp.mpf(x)


def to_fraction(x: Numeric) -> Fraction:
    """Exact binary value of an mpf (or any finite real) as a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    sign, mantissa, exponent, _ = mpmath.mpf(x)._mpf_
    if sign:
        mantissa = -mantissa
    if exponent >= 0:
        return Fraction(mantissa * 2**exponent)

    return Fraction(mantissa, 2 ** (-exponent))
