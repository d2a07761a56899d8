from fractions import Fraction

import pytest

from ramanujanpi.core.quadratic import QuadraticSurd


@pytest.mark.unit
def test_norm_and_conjugate(unit_29) -> None:
    # Act
    product = unit_29 * unit_29.conjugate()

    # Assert
    assert product == -1
    assert unit_29.norm() == -1
    assert unit_29.trace() == 5


@pytest.mark.unit
def test_powers_and_inverse(unit_29) -> None:
    # Act
    square = unit_29**2
    inverse = unit_29**-1

    # Assert
    assert square == QuadraticSurd(Fraction(27, 2), Fraction(5, 2), 29)
    assert inverse == QuadraticSurd(Fraction(-5, 2), Fraction(1, 2), 29)
    assert unit_29 * inverse == 1
    assert 1 / unit_29 == inverse


@pytest.mark.unit
def test_mixed_arithmetic(unit_29) -> None:
    # Act
    shifted = unit_29 + 1
    scaled = 2 * unit_29
    difference = 3 - unit_29

    # Assert
    assert shifted == QuadraticSurd(Fraction(7, 2), Fraction(1, 2), 29)
    assert scaled == QuadraticSurd(5, 1, 29)
    assert difference == QuadraticSurd(Fraction(1, 2), Fraction(-1, 2), 29)


@pytest.mark.unit
def test_invalid_surds(unit_29) -> None:
    # Assert
    with pytest.raises(ValueError):
        QuadraticSurd(1, 1, 4)
    with pytest.raises(ValueError):
        QuadraticSurd(1, 1, 1)
    with pytest.raises(ValueError):
        unit_29 + QuadraticSurd(1, 1, 2)
    with pytest.raises(ZeroDivisionError):
        unit_29 / QuadraticSurd(0, 0, 29)


@pytest.mark.unit
def test_evaluate_and_to_surd(unit_29, ctx30) -> None:
    # Act
    value = unit_29.evaluate(ctx30)
    tree_value = unit_29.to_surd().evaluate(ctx30)

    # Assert
    assert abs(value - (5 + ctx30.mp.sqrt(29)) / 2) < ctx30.tolerance()
    assert abs(tree_value - value) < ctx30.tolerance()


@pytest.mark.unit
def test_dict_round_trip(unit_29) -> None:
    # Act
    record = unit_29.to_dict()

    # Assert
    assert record == {"a": "5/2", "b": "1/2", "d": 29}
    assert QuadraticSurd.from_dict(record) == unit_29
