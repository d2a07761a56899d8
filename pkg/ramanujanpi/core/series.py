import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple

import mpmath

from ramanujanpi.core.definitions import (
    coefficient_families,
    exponent_patterns,
    series_kinds,
    series_targets,
)
from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.core.surd import Scalar, SurdExpr, exact_rational


def _factorial_ratio(numerator: int, *denominators: int) -> int:
    result = math.factorial(numerator)
    for denominator in denominators:
        result //= math.factorial(denominator)
    return result


def _indices(count: Optional[int]) -> Iterator[int]:
    return itertools.count() if count is None else iter(range(count))


@dataclass(frozen=True)
class CoefficientFamily:
    """Coefficient sequence a_n of a series for 1/pi. Core class of ramanujanpi.

    Three families are hypergeometric, with a_n a product of three Pochhammer
    symbols over (n!)^3 and a rational term ratio. The fourth, ``"chanCooperNested"``,
    is an alternating inner sum over quarter-hypergeometric coefficients and has no
    single-term recurrence.

    Parameters
    ----------
    tag: str
        One of the keys of :ref:`coefficient_families <definitions target>`.

    Attributes
    ----------
    definition: str
        Human-readable definition of a_n.
    pochhammer: tuple of Fraction, optional
        The three upper Pochhammer parameters, None for the nested family.
    integral_scale: int
        Smallest base s of the form used in published series such that s^n a_n is an
        integer for every n.

    Examples
    --------
    >>> from ramanujanpi.core.series import CoefficientFamily
    >>> family = CoefficientFamily("quarterHalfThreeQuarter")
    >>> list(family.coefficients(3))
    [Fraction(1, 1), Fraction(3, 32), Fraction(315, 8192)]
    """

    tag: str

    def __post_init__(self):
        if self.tag not in coefficient_families:
            raise ValueError(
                f"Expected tag to be one of {list(coefficient_families)}, got "
                f"{self.tag!r}."
            )

    def __str__(self):
        return f"ramanujanpi CoefficientFamily object ({self.tag})"

    @property
    def definition(self) -> str:
        return coefficient_families[self.tag]["definition"]

    @property
    def pochhammer(self) -> Optional[Tuple[Fraction, ...]]:
        return coefficient_families[self.tag]["pochhammer"]

    @property
    def integral_scale(self) -> int:
        return coefficient_families[self.tag]["integral_scale"]

    @property
    def is_hypergeometric(self) -> bool:
        return self.pochhammer is not None

    @property
    def limit_ratio(self) -> Fraction:
        """Limit of |a_{n+1}/a_n|.

        All hypergeometric families here are balanced 3F2 coefficients with limit 1.
        The nested family has generating function (1+x)^(-1) F(4x/(1+x)^2) with F of
        unit radius, so its coefficients also grow subexponentially.
        """
        return Fraction(1)

    def ratio(self, n: int) -> Fraction:
        """Exact ratio a_{n+1}/a_n = (n+p1)(n+p2)(n+p3)/(n+1)^3."""
        if not self.is_hypergeometric:
            raise TypeError(
                f"Expected a hypergeometric coefficient family, got {self.tag!r}."
            )
        numerator = Fraction(1)
        for parameter in self.pochhammer:
            numerator *= n + parameter

        return numerator / (n + 1) ** 3

    def coefficients(self, count: Optional[int] = None) -> Iterator[Fraction]:
        """Yields a_0, ..., a_{count-1}, or indefinitely if count is None."""
        if self.is_hypergeometric:
            value = Fraction(1)
            for n in _indices(count):
                yield value
                value *= self.ratio(n)
        else:
            yield from self._nested_coefficients(count)

    def _nested_coefficients(self, count: Optional[int]) -> Iterator[Fraction]:
        # 64^n a_n = sum_m (-1)^(n-m) 64^(n-m) (4m)!/(m!)^4 C(n+m, 2m) is an integer
        quartic = []
        for n in _indices(count):
            quartic.append(_factorial_ratio(4 * n, n, n, n, n))
            total = 0
            for m in range(n + 1):
                term = 64 ** (n - m) * quartic[m] * math.comb(n + m, 2 * m)
                total += term if (n - m) % 2 == 0 else -term
            yield Fraction(total, 64**n)

    def closed_form(self, n: int) -> Fraction:
        """a_n from its factorial closed form, independent of the recurrence."""
        if n < 0:
            raise ValueError(f"Expected n to be non-negative, got {n}.")
        if self.tag == "halfCubed":
            return Fraction(math.comb(2 * n, n), 4**n) ** 3
        if self.tag == "quarterHalfThreeQuarter":
            return Fraction(_factorial_ratio(4 * n, n, n, n, n), 4 ** (4 * n))
        if self.tag == "sixthHalfFiveSixth":
            return Fraction(_factorial_ratio(6 * n, 3 * n, n, n, n), 12 ** (3 * n))
        for value in self._nested_coefficients(n + 1):
            pass
        return value

    def pochhammer_form(self, n: int) -> Fraction:
        """a_n as (p1)_n (p2)_n (p3)_n / (n!)^3, evaluated by direct products."""
        if not self.is_hypergeometric:
            raise TypeError(
                f"Expected a hypergeometric coefficient family, got {self.tag!r}."
            )
        value = Fraction(1, math.factorial(n) ** 3)
        for parameter in self.pochhammer:
            for j in range(n):
                value *= parameter + j

        return value


@dataclass(frozen=True)
class SeriesSpec:
    """A fully built series for 1/pi or a benchmark series. Core class of ramanujanpi.

    Geometric specs describe the sum

        multiplier * sum_n (+-1)^n scale^n a_n (A + n B) base^(pattern(n))

    where the pattern is one of the exponent patterns of
    :ref:`exponent_patterns <definitions target>`. Elementary specs (kinds
    ``"gregory"``, ``"euler"`` and ``"brouncker"``) carry no coefficient data and are
    evaluated by dedicated routines.

    Parameters
    ----------
    key: str
        Catalog key, e.g. ``"ramanujan58"``.
    family: CoefficientFamily, optional
        Coefficient family, required for geometric specs.
    multiplier: Scalar, optional
        Overall multiplier M, defaults to 1.
    A: Scalar, optional
        Constant part of the linear term.
    B: Scalar, optional
        Slope of the linear term.
    base: Scalar, optional
        Base z with |z| < 1.
    alternating: bool, optional
        Whether the terms carry the sign (-1)^n.
    pattern: str, optional
        Exponent pattern of the base, defaults to ``"n"``.
    scale: int, optional
        Integer s in s^n a_n, defaults to 1. Published integer forms use 64, 256 or
        1728.
    target: str, optional
        Label of the constant the series sums to, defaults to ``"1/pi"``.
    provenance: str, optional
        Family tag, N and citation of the series.
    kind: str, optional
        ``"geometric"`` (default) or one of the elementary kinds.

    Notes
    -----
    Exact fields (ints, Fractions, SurdExpr trees) evaluate to any precision. Fields
    produced by high-precision recovery may be mpmath reals; such specs are valid
    inputs to direct summation but not to binary splitting.
    """

    key: str
    family: Optional[CoefficientFamily] = None
    multiplier: Scalar = 1
    A: Scalar = 0
    B: Scalar = 0
    base: Scalar = 0
    alternating: bool = False
    pattern: str = "n"
    scale: int = 1
    target: str = "1/pi"
    provenance: str = ""
    kind: str = "geometric"

    def __post_init__(self):
        if self.kind not in series_kinds:
            raise ValueError(
                f"Expected kind to be one of {list(series_kinds)}, got {self.kind!r}."
            )
        if self.pattern not in exponent_patterns:
            raise ValueError(
                f"Expected pattern to be one of {list(exponent_patterns)}, got "
                f"{self.pattern!r}."
            )
        if self.target not in series_targets:
            raise ValueError(
                f"Expected target to be one of {list(series_targets)}, got "
                f"{self.target!r}."
            )
        if self.is_geometric and self.family is None:
            raise ValueError(f"Expected a coefficient family for {self.key!r}.")
        if not isinstance(self.scale, int) or self.scale < 1:
            raise ValueError(
                f"Expected scale to be a positive integer, got {self.scale!r}."
            )

    def __str__(self):
        return f"ramanujanpi SeriesSpec object ({self.key})"

    @property
    def is_geometric(self) -> bool:
        return self.kind == "geometric"

    @property
    def slope(self) -> int:
        return exponent_patterns[self.pattern]["slope"]

    @property
    def offset(self) -> Fraction:
        return exponent_patterns[self.pattern]["offset"]

    @property
    def is_rational(self) -> bool:
        """True if A, B and the base are exact rationals and a_n has a rational ratio.

        These are the specs accepted by binary splitting; the multiplier and the
        folded base power may stay irrational.
        """
        if not self.is_geometric or not self.family.is_hypergeometric:
            return False
        return all(
            exact_rational(value) is not None for value in (self.A, self.B, self.base)
        )

    def numeric_fields(
        self, ctx: PrecisionContext
    ) -> Tuple[mpmath.mpf, mpmath.mpf, mpmath.mpf, mpmath.mpf]:
        """Returns (M z^offset, A, B, +-scale z^slope) at working precision.

        The folded multiplier absorbs the fixed part of the base power, so that
        the term of index n is ``M' a_n (A + n B) w^n``.
        """
        if not self.is_geometric:
            raise TypeError(
                f"Expected a geometric series spec, got kind {self.kind!r}."
            )
        mp = ctx.mp
        z = ctx.convert(self.base)
        if not abs(z) < 1:
            raise ValueError(
                f"Expected |base| < 1 for {self.key!r}, got {mpmath.nstr(z, 15)}."
            )
        offset = self.offset
        if offset.denominator != 1 and z < 0:
            raise ValueError(
                f"Expected a positive base for pattern {self.pattern!r}, got "
                f"{mpmath.nstr(z, 15)}."
            )
        folded = ctx.convert(self.multiplier)
        if offset:
            folded *= mp.root(z, offset.denominator) ** offset.numerator
        ratio = self.scale * z**self.slope
        if self.alternating:
            ratio = -ratio

        return folded, ctx.convert(self.A), ctx.convert(self.B), ratio

    def target_value(self, ctx: PrecisionContext) -> mpmath.mpf:
        """The labeled target constant computed from mpmath's pi."""
        return series_targets[self.target]["from_pi"](ctx.pi)

    def to_record(self) -> dict:
        """Human-readable record with the stable serialization keys."""
        record = {
            "key": self.key,
            "kind": self.kind,
            "family": self.family.tag if self.family is not None else None,
            "multiplier": scalar_text(self.multiplier),
            "A": scalar_text(self.A),
            "B": scalar_text(self.B),
            "base": scalar_text(self.base),
            "alternating": self.alternating,
            "pattern": self.pattern,
            "scale": self.scale,
            "target": self.target,
            "provenance": self.provenance,
        }
        if not self.is_geometric:
            for name in ("multiplier", "A", "B", "base", "pattern", "scale"):
                record[name] = None

        return record


def scalar_text(value: Scalar) -> str:
    """Text form of a scalar that parses back with :meth:`SurdExpr.parse` when exact."""
    if isinstance(value, (int, Fraction, SurdExpr)):
        return str(value)

    return mpmath.nstr(value, 40)


@dataclass(frozen=True)
class EvaluationReport:
    """Result of one series evaluation.

    Parameters
    ----------
    key: str
        Catalog key or method name that produced the value.
    value: mpmath.mpf
        Partial sum (or continued fraction value) approximating the target.
    terms_used: int
        Number of terms summed (continued fraction depth for Brouncker).
    error_bound: mpmath.mpf
        Bound on |value - limit| from geometric domination of the tail (or the
        classical remainder bound for the elementary series).
    digits_per_term: float
        Measured -log10|t_{n+1}/t_n| averaged over the last terms; None when fewer
        than two terms were summed or for non-geometric series.
    target: str
        Label of the target constant.
    method: str
        ``"direct"``, ``"binary_splitting"`` or ``"agm"``.
    seconds: float, optional
        Wall time of the evaluation.
    """

    key: str
    value: mpmath.mpf
    terms_used: int
    error_bound: mpmath.mpf
    digits_per_term: Optional[float]
    target: str = "1/pi"
    method: str = "direct"
    seconds: Optional[float] = None

    def __str__(self):
        return (
            f"ramanujanpi EvaluationReport object ({self.key}, {self.terms_used} "
            f"terms, {self.method})"
        )

    def pi_value(self) -> mpmath.mpf:
        """pi recovered from the value through the target's inverse map."""
        return series_targets[self.target]["to_pi"](self.value)

    def digits_correct(self, reference: mpmath.mpf) -> float:
        """Number of correct decimal digits of the value against a reference."""
        defect = abs(self.value - reference)
        if defect == 0:
            return math.inf
        return float(-mpmath.log10(defect / abs(reference)))
