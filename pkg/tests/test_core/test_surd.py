from fractions import Fraction

import pytest

from ramanujanpi.core.surd import (
    Constant,
    Power,
    Radical,
    SurdExpr,
    as_surd,
    exact_rational,
)


@pytest.mark.unit
def test_parse_structure() -> None:
    # Act
    expr = SurdExpr.parse("sqrt(8)/9801")

    # Assert
    assert expr.factors[0] == Radical(Constant(Fraction(8)), Fraction(1, 2))
    assert expr.factors[1] == Power(Constant(Fraction(9801)), -1)
    assert SurdExpr.parse("1 + sqrt(2)") == SurdExpr.parse("1+sqrt(2)")
    assert SurdExpr.parse("2^(1/2)") == Radical(Constant(Fraction(2)), Fraction(1, 2))


@pytest.mark.unit
def test_parse_round_trip() -> None:
    # Arrange
    texts = ["sqrt(8)/9801", "(sqrt(29) - 5)/2", "1 - sqrt(2)", "3^(3/4)*sqrt(2)"]

    # Act
    trees = [SurdExpr.parse(text) for text in texts]

    # Assert
    for tree in trees:
        assert SurdExpr.parse(str(tree)) == tree


@pytest.mark.unit
def test_parse_errors() -> None:
    # Assert
    with pytest.raises(ValueError):
        SurdExpr.parse("(1 + sqrt(2)")
    with pytest.raises(ValueError):
        SurdExpr.parse("1 + ")
    with pytest.raises(ValueError):
        SurdExpr.parse("2^x")
    with pytest.raises(ValueError):
        SurdExpr.parse("1 2")


@pytest.mark.unit
def test_rational_value() -> None:
    # Assert
    assert SurdExpr.parse("sqrt(9/4) + 1").rational_value() == Fraction(5, 2)
    assert SurdExpr.parse("8^(2/3)").rational_value() == Fraction(4)
    assert SurdExpr.parse("sqrt(2)").rational_value() is None
    assert SurdExpr.parse("sqrt(2)^2").rational_value() is None


@pytest.mark.unit
def test_evaluate(ctx30) -> None:
    # Arrange
    golden = SurdExpr.parse("(sqrt(5)+1)/2")
    root_two = SurdExpr.parse("sqrt(2)^2")

    # Act
    value = golden.evaluate(ctx30)

    # Assert
    assert abs(value**2 - value - 1) < ctx30.tolerance()
    assert abs(root_two.evaluate(ctx30) - 2) < ctx30.tolerance()


@pytest.mark.unit
def test_evaluate_errors(ctx30) -> None:
    # Assert
    with pytest.raises(ValueError):
        SurdExpr.parse("sqrt(1-2)").evaluate(ctx30)
    with pytest.raises(ZeroDivisionError):
        SurdExpr.parse("1/(2-2)").evaluate(ctx30)


@pytest.mark.unit
def test_operators(ctx30) -> None:
    # Arrange
    root = SurdExpr.parse("sqrt(2)")

    # Act
    total = (as_surd(1) + 1).rational_value()
    product = (root * root).evaluate(ctx30)
    quotient = (1 / root).evaluate(ctx30)

    # Assert
    assert total == 2
    assert abs(product - 2) < ctx30.tolerance()
    assert abs(quotient - ctx30.mp.sqrt(2) / 2) < ctx30.tolerance()


@pytest.mark.unit
def test_as_surd_and_exact_rational(ctx30) -> None:
    # Assert
    assert as_surd(3) == Constant(Fraction(3))
    assert as_surd("sqrt(2)") == SurdExpr.parse("sqrt(2)")
    assert exact_rational(SurdExpr.parse("sqrt(9/4)")) == Fraction(3, 2)
    assert exact_rational(5) == Fraction(5)
    assert exact_rational(ctx30.convert("1/2")) is None
    with pytest.raises(TypeError):
        as_surd(0.5)
