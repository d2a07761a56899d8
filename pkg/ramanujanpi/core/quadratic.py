from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.surd import Constant, Radical, SurdExpr
from ramanujanpi.utils.arithmetic import is_squarefree


@dataclass(frozen=True)
class QuadraticSurd:
    """Exact element a + b sqrt(d) of a real quadratic field.

    Parameters
    ----------
    a: Fraction
        Rational part.
    b: Fraction
        Coefficient of sqrt(d).
    d: int
        Square-free integer >= 2. Arithmetic is only defined between surds sharing
        the same d (and rationals).

    Examples
    --------
    >>> from ramanujanpi.core.quadratic import QuadraticSurd
    >>> u = QuadraticSurd("5/2", "1/2", 29)
    >>> u * u.conjugate()
    QuadraticSurd(a=Fraction(-1, 1), b=Fraction(0, 1), d=29)
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not (isinstance(self.d, int) and self.d >= 2 and is_squarefree(self.d)):
            raise ValueError(
                f"Expected d to be a square-free integer >= 2, got {self.d!r}."
            )

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt({self.d})"

    @classmethod
    def from_dict(cls, record: dict) -> "QuadraticSurd":
        return cls(Fraction(str(record["a"])), Fraction(str(record["b"])), record["d"])

    def to_dict(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "d": self.d}

    def _coerce(self, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            if other.d != self.d:
                raise ValueError(
                    f"Expected surds over the same sqrt({self.d}), got "
                    f"sqrt({other.d})."
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticSurd(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticSurd(
            self.a * other.a + self.d * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError("Division by a zero quadratic surd.")
        product = self * other.conjugate()
        return QuadraticSurd(product.a / norm, product.b / norm, self.d)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return 1 / (self ** (-exponent))
        result = QuadraticSurd(Fraction(1), Fraction(0), self.d)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - d b^2."""
        return self.a**2 - self.d * self.b**2

    def trace(self) -> Fraction:
        return 2 * self.a

    def evaluate(self, ctx: PrecisionContext) -> mpmath.mpf:
        return ctx.convert(self.a) + ctx.convert(self.b) * ctx.mp.sqrt(self.d)

    def to_surd(self) -> SurdExpr:
        return Constant(self.a) + Constant(self.b) * Radical(
            Constant(Fraction(self.d)), Fraction(1, 2)
        )

    def __eq__(self, other: Union["QuadraticSurd", int, Fraction]):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d))
