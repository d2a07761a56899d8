from fractions import Fraction
from typing import List, Union

from ramanujanpi.core.series import CoefficientFamily


def _as_family(family: Union[CoefficientFamily, str]) -> CoefficientFamily:
    if isinstance(family, CoefficientFamily):
        return family
    return CoefficientFamily(family)


def coeff(family: Union[CoefficientFamily, str], n: int) -> Fraction:
    """Exact coefficient a_n of a family.

    Hypergeometric families are advanced from a_0 = 1 through the rational ratio
    a_{k+1}/a_k, one big-rational product per step.

    Parameters
    ----------
    family: CoefficientFamily or str
        Family object or tag.
    n: int
        Non-negative index.

    Returns
    -------
    a_n: Fraction

    Examples
    --------
    >>> from ramanujanpi.series.coefficients import coeff
    >>> coeff("sixthHalfFiveSixth", 1)
    Fraction(5, 72)
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"Expected n to be an integer, got {n!r}.")
    if n < 0:
        raise ValueError(f"Expected n to be non-negative, got {n}.")
    family = _as_family(family)
    if not family.is_hypergeometric:
        return family.closed_form(n)

    value = Fraction(1)
    for j in range(n):
        value *= family.ratio(j)

    return value


def coefficient_table(
    family: Union[CoefficientFamily, str], count: int
) -> List[Fraction]:
    """The first `count` coefficients a_0, ..., a_{count-1}."""
    return list(_as_family(family).coefficients(count))


def integral_coefficients(
    family: Union[CoefficientFamily, str], count: int
) -> List[int]:
    """s^n a_n for n < count, with s the family's integral scale.

    Raises
    ------
    ArithmeticError
        If a scaled coefficient is not an integer.
    """
    family = _as_family(family)
    scale = family.integral_scale
    values = []
    for n, value in enumerate(family.coefficients(count)):
        scaled = value * scale**n
        if scaled.denominator != 1:
            raise ArithmeticError(
                f"Expected {scale}^{n} a_{n} of {family.tag} to be an integer, got "
                f"{scaled}."
            )
        values.append(scaled.numerator)

    return values
