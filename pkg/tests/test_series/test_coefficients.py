from fractions import Fraction

import pytest

from ramanujanpi.core.series import CoefficientFamily
from ramanujanpi.series.coefficients import (
    coeff,
    coefficient_table,
    integral_coefficients,
)


@pytest.mark.unit
def test_coeff() -> None:
    # Assert
    assert coeff("sixthHalfFiveSixth", 1) == Fraction(5, 72)
    assert coeff(CoefficientFamily("halfCubed"), 0) == 1
    assert coeff("quarterHalfThreeQuarter", 2) == Fraction(315, 8192)
    assert coeff("chanCooperNested", 1) == Fraction(-5, 8)


@pytest.mark.unit
def test_coeff_invalid_index() -> None:
    # Assert
    with pytest.raises(ValueError):
        coeff("halfCubed", -1)
    with pytest.raises(TypeError):
        coeff("halfCubed", 1.0)
    with pytest.raises(ValueError):
        coeff("thirdTwoThirds", 1)


@pytest.mark.unit
def test_coefficient_table() -> None:
    # Act
    table = coefficient_table("halfCubed", 3)

    # Assert
    assert table == [Fraction(1), Fraction(1, 8), Fraction(27, 512)]


@pytest.mark.unit
def test_integral_coefficients() -> None:
    # Act
    half = integral_coefficients("halfCubed", 3)
    quarter = integral_coefficients("quarterHalfThreeQuarter", 4)
    sixth = integral_coefficients("sixthHalfFiveSixth", 3)
    nested = integral_coefficients("chanCooperNested", 3)

    # Assert
    assert half == [1, 8, 216]
    assert quarter == [1, 24, 2520, 369600]
    assert sixth == [1, 120, 83160]
    assert nested == [1, -40, 2008]


@pytest.mark.unit
def test_integrality_holds_far_out() -> None:
    for tag in ("halfCubed", "quarterHalfThreeQuarter", "sixthHalfFiveSixth"):
        # Act
        values = integral_coefficients(tag, 60)

        # Assert
        assert all(isinstance(value, int) for value in values)
