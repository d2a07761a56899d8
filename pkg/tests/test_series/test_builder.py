from fractions import Fraction

import pytest

from ramanujanpi.series.builder import (
    build_series,
    check_family,
    normalize_series,
    recover_integer,
)
from ramanujanpi.series.evaluate import evaluate_direct


@pytest.mark.unit
def test_families_sum_to_reciprocal_pi(ctx30, table_rows) -> None:
    # Arrange
    samples = [("G", 3), ("G", 37), ("g", 10), ("g4N", 6), ("xN", 22), ("yN", 7)]

    for family_tag, N in samples:
        # Act
        spec = build_series(family_tag, table_rows[Fraction(N)], ctx30, check=False)
        report = evaluate_direct(spec, ctx30)

        # Assert
        assert spec.key == f"{family_tag}-{N}"
        assert abs(report.value - 1 / ctx30.pi) < ctx30.tolerance(8)


@pytest.mark.unit
def test_klein_family(ctx30, table_rows) -> None:
    # Act
    spec = build_series("JN", table_rows[Fraction(7)], ctx30)

    # Assert
    assert spec.family.tag == "sixthHalfFiveSixth"
    multiplier = ctx30.convert(spec.multiplier)
    assert abs(multiplier - 1 / (3 * ctx30.mp.sqrt(3))) < ctx30.tolerance()


@pytest.mark.unit
def test_normalize_ramanujan58(ctx60, table_rows) -> None:
    # Arrange
    raw = build_series("xN", table_rows[Fraction(58)], ctx60)

    # Act
    spec = normalize_series(raw, "sqrt(8)/9801", 256, ctx60, key="published")

    # Assert
    assert (spec.A, spec.B) == (1103, 26390)
    assert spec.base == Fraction(1, 396**4)
    assert spec.key == "published"
    assert spec.is_rational


@pytest.mark.unit
def test_normalize_with_wrong_multiplier(ctx60, table_rows) -> None:
    # Arrange
    raw = build_series("xN", table_rows[Fraction(58)], ctx60)

    # Assert
    with pytest.raises(ArithmeticError):
        normalize_series(raw, "sqrt(7)/9801", 256, ctx60)


@pytest.mark.unit
def test_family_ranges(ctx30, table_rows) -> None:
    # Assert
    with pytest.raises(ValueError):
        check_family("yN", Fraction(3))
    with pytest.raises(ValueError):
        check_family("h", Fraction(3))
    assert check_family("G", Fraction(3))["coefficients"] == "halfCubed"
    # g_2 = 1 puts the base on the unit circle
    with pytest.raises(ValueError):
        build_series("g", table_rows[Fraction(2)], ctx30)


@pytest.mark.unit
def test_recover_integer(ctx30) -> None:
    # Arrange
    close = ctx30.convert(1103) + ctx30.mp.mpf(10) ** -35
    far = ctx30.convert("1103.5")

    # Assert
    assert recover_integer(close, ctx30) == 1103
    with pytest.raises(ArithmeticError):
        recover_integer(far, ctx30, name="A")
