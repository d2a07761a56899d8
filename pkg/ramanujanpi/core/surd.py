import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

import gmpy2
import mpmath

from ramanujanpi.core.precision import PrecisionContext


class SurdExpr:
    """Exact expression tree over rationals with sums, products, integer powers and
    rational-exponent radicals. Core class of ramanujanpi.

    Trees are built from the node classes :class:`Constant`, :class:`Sum`,
    :class:`Product`, :class:`Power` and :class:`Radical`, by combining trees with
    the arithmetic operators, or by parsing the text notation used in the
    singular-value data file with :meth:`parse`.

    Notes
    -----
    The text notation accepts integers, decimal fractions, ``+ - * /``, ``^`` with an
    integer or parenthesized rational exponent, ``sqrt(...)`` and parentheses::

        (sqrt(2)-1)^6*(13*sqrt(58)-99)
        (3 - 3^(3/4)*sqrt(2)*(sqrt(3)-1))/2

    No simplification is attempted: a tree is evaluated exactly as written.

    Examples
    --------
    >>> from ramanujanpi.core.precision import PrecisionContext
    >>> from ramanujanpi.core.surd import SurdExpr
    >>> import mpmath
    >>> SurdExpr.parse("sqrt(9/4) + 1").rational_value()
    Fraction(5, 2)
    >>> golden = SurdExpr.parse("(sqrt(5)+1)/2")
    >>> mpmath.nstr(golden.evaluate(PrecisionContext(30)), 10)
    '1.618033989'
    """

    def evaluate(self, ctx: PrecisionContext) -> mpmath.mpf:
        raise NotImplementedError

    def rational_value(self) -> Optional[Fraction]:
        """Returns the exact value if the tree denotes a rational number, else None."""
        raise NotImplementedError

    @staticmethod
    def parse(text: str) -> "SurdExpr":
        return _Parser(text).parse()

    def __add__(self, other):
        return Sum((self, as_surd(other)))

    def __radd__(self, other):
        return Sum((as_surd(other), self))

    def __sub__(self, other):
        return Sum((self, Product((Constant(Fraction(-1)), as_surd(other)))))

    def __rsub__(self, other):
        return as_surd(other) - self

    def __neg__(self):
        return Product((Constant(Fraction(-1)), self))

    def __mul__(self, other):
        return Product((self, as_surd(other)))

    def __rmul__(self, other):
        return Product((as_surd(other), self))

    def __truediv__(self, other):
        return Product((self, Power(as_surd(other), -1)))

    def __rtruediv__(self, other):
        return as_surd(other) / self

    def __pow__(self, exponent):
        exponent = Fraction(exponent)
        if exponent.denominator == 1:
            return Power(self, int(exponent))
        return Radical(self, exponent)


@dataclass(frozen=True)
class Constant(SurdExpr):
    value: Fraction

    def evaluate(self, ctx: PrecisionContext) -> mpmath.mpf:
        return ctx.convert(self.value)

    def rational_value(self) -> Optional[Fraction]:
        return self.value

    def __str__(self):
        return str(self.value) if self.value >= 0 else f"({self.value})"


@dataclass(frozen=True)
class Sum(SurdExpr):
    terms: Tuple[SurdExpr, ...]

    def evaluate(self, ctx: PrecisionContext) -> mpmath.mpf:
        return ctx.mp.fsum(term.evaluate(ctx) for term in self.terms)

    def rational_value(self) -> Optional[Fraction]:
        values = [term.rational_value() for term in self.terms]
        if any(value is None for value in values):
            return None
        return sum(values, Fraction(0))

    def __str__(self):
        text = str(self.terms[0])
        for term in self.terms[1:]:
            rendered = str(term)
            if rendered.startswith("-"):
                text += " - " + rendered[1:]
            else:
                text += " + " + rendered
        return "(" + text + ")"


@dataclass(frozen=True)
class Product(SurdExpr):
    factors: Tuple[SurdExpr, ...]

    def evaluate(self, ctx: PrecisionContext) -> mpmath.mpf:
        return ctx.mp.fprod(factor.evaluate(ctx) for factor in self.factors)

    def rational_value(self) -> Optional[Fraction]:
        result = Fraction(1)
        for factor in self.factors:
            value = factor.rational_value()
            if value is None:
                return None
            result *= value
        return result

    def __str__(self):
        if len(self.factors) > 1 and self.factors[0] == Constant(Fraction(-1)):
            return "-" + "*".join(str(factor) for factor in self.factors[1:])
        return "*".join(str(factor) for factor in self.factors)


@dataclass(frozen=True)
class Power(SurdExpr):
    base: SurdExpr
    exponent: int

    def evaluate(self, ctx: PrecisionContext) -> mpmath.mpf:
        value = self.base.evaluate(ctx)
        if value == 0 and self.exponent < 0:
            raise ZeroDivisionError(f"Division by zero evaluating {self}.")
        return value**self.exponent

    def rational_value(self) -> Optional[Fraction]:
        value = self.base.rational_value()
        if value is None:
            return None
        if value == 0 and self.exponent < 0:
            raise ZeroDivisionError(f"Division by zero evaluating {self}.")
        return value**self.exponent

    def __str__(self):
        return f"({self.base})^{self.exponent}"


@dataclass(frozen=True)
class Radical(SurdExpr):
    base: SurdExpr
    exponent: Fraction

    def evaluate(self, ctx: PrecisionContext) -> mpmath.mpf:
        value = self.base.evaluate(ctx)
        if value < 0:
            raise ValueError(
                f"Expected a non-negative radicand in {self}, got "
                f"{mpmath.nstr(value, 15)}."
            )
        if value == 0 and self.exponent < 0:
            raise ZeroDivisionError(f"Division by zero evaluating {self}.")
        return ctx.mp.root(value, self.exponent.denominator) ** self.exponent.numerator

    def rational_value(self) -> Optional[Fraction]:
        value = self.base.rational_value()
        if value is None or value < 0:
            return None
        q = self.exponent.denominator
        numerator, exact_num = gmpy2.iroot(gmpy2.mpz(value.numerator), q)
        denominator, exact_den = gmpy2.iroot(gmpy2.mpz(value.denominator), q)
        if not (exact_num and exact_den):
            return None
        return Fraction(int(numerator), int(denominator)) ** self.exponent.numerator

    def __str__(self):
        if self.exponent == Fraction(1, 2):
            return f"sqrt({self.base})"
        return f"({self.base})^({self.exponent})"


Scalar = Union[int, Fraction, SurdExpr, mpmath.mpf]
"""Exact-or-real scalar: exact values are ints, Fractions or SurdExpr trees"""


def as_surd(value: Union[int, Fraction, str, SurdExpr]) -> SurdExpr:
    """Converts ints, Fractions and expression strings to a SurdExpr."""
    if isinstance(value, SurdExpr):
        return value
    if isinstance(value, (int, Fraction)):
        return Constant(Fraction(value))
    if isinstance(value, str):
        return SurdExpr.parse(value)
    raise TypeError(f"Expected an exact scalar, got {value!r}.")


def exact_rational(value: Scalar) -> Optional[Fraction]:
    """Exact rational value of an exact scalar, None for irrationals and reals."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, SurdExpr):
        return value.rational_value()
    return None


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|(sqrt)|(.))")


class _Parser:
    """Recursive descent parser for the SurdExpr text notation."""

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[str] = []
        for number, name, symbol in _TOKEN.findall(text):
            token = number or name or symbol
            if token.strip():
                self.tokens.append(token)
        self.position = 0

    def _peek(self) -> Optional[str]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def _take(self, expected: str = None) -> str:
        token = self._peek()
        if token is None or (expected is not None and token != expected):
            raise ValueError(
                f"Expected {expected or 'a token'} at position {self.position} of "
                f"{self.text!r}, got {token!r}."
            )
        self.position += 1
        return token

    def parse(self) -> SurdExpr:
        expr = self._expression()
        if self._peek() is not None:
            raise ValueError(f"Unexpected token {self._peek()!r} in {self.text!r}.")
        return expr

    def _expression(self) -> SurdExpr:
        terms = [self._term()]
        while self._peek() in ("+", "-"):
            if self._take() == "+":
                terms.append(self._term())
            else:
                terms.append(-self._term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def _term(self) -> SurdExpr:
        factors = [self._signed()]
        while self._peek() in ("*", "/"):
            if self._take() == "*":
                factors.append(self._signed())
            else:
                factors.append(Power(self._signed(), -1))
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def _signed(self) -> SurdExpr:
        if self._peek() == "-":
            self._take()
            return -self._signed()
        return self._power()

    def _power(self) -> SurdExpr:
        base = self._primary()
        if self._peek() == "^":
            self._take()
            return base ** self._exponent()
        return base

    def _exponent(self) -> Fraction:
        if self._peek() == "(":
            self._take()
            sign = 1
            if self._peek() == "-":
                self._take()
                sign = -1
            value = Fraction(self._integer())
            if self._peek() == "/":
                self._take()
                value /= self._integer()
            self._take(")")
            return sign * value
        if self._peek() == "-":
            self._take()
            return -Fraction(self._integer())
        return Fraction(self._integer())

    def _integer(self) -> int:
        token = self._take()
        if not token.isdigit():
            raise ValueError(f"Expected an integer exponent in {self.text!r}.")
        return int(token)

    def _primary(self) -> SurdExpr:
        token = self._take()
        if token == "(":
            expr = self._expression()
            self._take(")")
            return expr
        if token == "sqrt":
            self._take("(")
            expr = self._expression()
            self._take(")")
            return Radical(expr, Fraction(1, 2))
        if token[0].isdigit():
            return Constant(Fraction(token))
        raise ValueError(f"Unexpected token {token!r} in {self.text!r}.")
