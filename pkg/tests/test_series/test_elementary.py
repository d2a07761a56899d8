import pytest

from ramanujanpi.core.series import SeriesSpec
from ramanujanpi.series.catalog import get_spec
from ramanujanpi.series.elementary import (
    brouncker_value,
    elementary_float_sum,
    estimated_elementary_terms,
    euler_sum,
    evaluate_elementary,
    float_digits,
    gregory_sum,
)
from ramanujanpi.series.evaluate import evaluate_direct


@pytest.mark.unit
def test_gregory_sum(ctx30) -> None:
    # Act
    value, bound = gregory_sum(1000, ctx30)

    # Assert
    assert abs(value - ctx30.pi / 4) <= bound
    assert bound == ctx30.convert("1/2001")


@pytest.mark.unit
def test_euler_sum_starts_at_one(ctx30) -> None:
    # Act
    first, _ = euler_sum(1, ctx30)
    value, bound = euler_sum(100, ctx30)

    # Assert
    assert first == 1
    assert 0 < ctx30.pi**2 / 6 - value <= bound


@pytest.mark.unit
def test_brouncker_value(ctx30) -> None:
    # Act
    depth_0, _ = brouncker_value(0, ctx30)
    depth_1, _ = brouncker_value(1, ctx30)
    depth_5, bound = brouncker_value(5, ctx30)
    gregory, _ = gregory_sum(6, ctx30)

    # Assert
    assert depth_0 == 1
    assert depth_1 == ctx30.convert("3/2")
    assert abs(depth_5 * gregory - 1) < ctx30.tolerance()
    assert abs(depth_5 - 4 / ctx30.pi) <= bound


@pytest.mark.unit
def test_evaluate_elementary_with_terms(ctx30) -> None:
    # Arrange
    spec = SeriesSpec(key="brouncker", kind="brouncker", target="4/pi")

    # Act
    value, used, _ = evaluate_elementary(spec, ctx30, n_terms=1)
    report = evaluate_direct(get_spec("gregory"), ctx30, n_terms=10)

    # Assert
    assert value == 1
    assert used == 1
    assert report.terms_used == 10
    assert report.digits_per_term is None
    assert abs(report.pi_value() - ctx30.pi) < 0.2


@pytest.mark.unit
def test_estimated_elementary_terms() -> None:
    # Assert
    assert estimated_elementary_terms("gregory", 4) == 5000
    assert estimated_elementary_terms("euler", 4) == 10000
    assert estimated_elementary_terms("brouncker", 4) == 10000


@pytest.mark.unit
def test_float_sums(ctx30) -> None:
    # Arrange
    quarter_pi = float(ctx30.pi / 4)

    # Act
    gregory = elementary_float_sum("gregory", 10**4)
    euler = elementary_float_sum("euler", 10**4)
    brouncker = elementary_float_sum("brouncker", 1)

    # Assert
    assert 4 < float_digits(gregory, quarter_pi) < 5
    assert 3.5 < float_digits(euler, float(ctx30.pi**2 / 6)) < 4.5
    assert brouncker == 1.0
    assert float_digits(quarter_pi, quarter_pi) == 16.0
    with pytest.raises(ValueError):
        elementary_float_sum("machin", 10)
