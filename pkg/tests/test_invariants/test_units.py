from fractions import Fraction

import pytest

from ramanujanpi.core.quadratic import QuadraticSurd
from ramanujanpi.invariants.units import (
    convergents,
    field_discriminant,
    fundamental_unit,
)


@pytest.mark.unit
def test_fundamental_units() -> None:
    # Arrange
    expected = {
        2: QuadraticSurd(1, 1, 2),
        3: QuadraticSurd(2, 1, 3),
        5: QuadraticSurd(Fraction(1, 2), Fraction(1, 2), 5),
        7: QuadraticSurd(8, 3, 7),
        13: QuadraticSurd(Fraction(3, 2), Fraction(1, 2), 13),
        15: QuadraticSurd(4, 1, 15),
        29: QuadraticSurd(Fraction(5, 2), Fraction(1, 2), 29),
        37: QuadraticSurd(6, 1, 37),
        58: QuadraticSurd(99, 13, 58),
        94: QuadraticSurd(2143295, 221064, 94),
    }

    for d, unit in expected.items():
        # Act
        found = fundamental_unit(d)

        # Assert
        assert found == unit
        assert abs(found.norm()) == 1


@pytest.mark.unit
def test_unit_string() -> None:
    # Assert
    assert str(fundamental_unit(29)) == "5/2 + 1/2*sqrt(29)"


@pytest.mark.unit
def test_field_discriminant() -> None:
    # Assert
    assert field_discriminant(5) == 5
    assert field_discriminant(2) == 8
    assert field_discriminant(58) == 232


@pytest.mark.unit
def test_convergents_of_sqrt_two() -> None:
    # Arrange
    expansion = convergents(0, 1, 2)

    # Act
    first = [next(expansion) for _ in range(4)]

    # Assert
    assert first == [(1, 1), (3, 2), (7, 5), (17, 12)]
    with pytest.raises(ValueError):
        next(convergents(0, 1, 4))


@pytest.mark.unit
def test_invalid_fields() -> None:
    # Assert
    with pytest.raises(ValueError):
        fundamental_unit(4)
    with pytest.raises(ValueError):
        fundamental_unit(1)
    with pytest.raises(TypeError):
        fundamental_unit(2.0)
