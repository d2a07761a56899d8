import pandas as pd
import pytest

from ramanujanpi.core.report import VerificationReport


@pytest.mark.unit
def test_from_checks(example_report) -> None:
    # Assert
    assert len(example_report) == 4
    assert example_report.digits == 30
    assert list(example_report["passed"]) == [True, True, False, True]
    assert not example_report.passed
    assert example_report.failures == ["N=13 alpha"]
    assert example_report.groups == ["legendre", "tables", "units"]


@pytest.mark.unit
def test_max_defect(example_report) -> None:
    # Assert
    assert example_report.max_defect() == 0.25
    assert example_report.max_defect("legendre") == 1e-40
    with pytest.raises(ValueError):
        example_report.max_defect("lattice")


@pytest.mark.unit
def test_summary(example_report) -> None:
    # Act
    summary = example_report.summary()

    # Assert
    assert list(summary.index) == ["legendre", "tables", "units"]
    assert list(summary["checks"]) == [2, 1, 1]
    assert list(summary["failed"]) == [0, 1, 0]


@pytest.mark.unit
def test_add_and_to_dict(example_checks) -> None:
    # Arrange
    first = VerificationReport.from_checks(example_checks[:2], digits=30)
    second = VerificationReport.from_checks(example_checks[2:])

    # Act
    combined = first + second
    record = combined.to_dict()

    # Assert
    assert len(combined) == 4
    assert combined.digits == 30
    assert record["passed"] is False
    assert len(record["checks"]) == 4
    assert record["checks"][2]["check"] == "N=13 alpha"


@pytest.mark.unit
def test_empty_and_invalid_reports() -> None:
    # Arrange
    empty = VerificationReport.from_checks([])

    # Assert
    assert not empty.passed
    assert empty.failures == []
    with pytest.raises(ValueError):
        VerificationReport(pd.DataFrame({"check": ["x"]}))
