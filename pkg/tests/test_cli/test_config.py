import pytest

from ramanujanpi.cli.config import RunConfig, available_methods
from ramanujanpi.settings import DIGITS_CAP


@pytest.mark.unit
def test_available_methods() -> None:
    # Act
    methods = available_methods()

    # Assert
    assert len(methods) == 11
    assert methods[-1] == "agm"
    assert "chudnovsky" in methods


@pytest.mark.unit
def test_valid_configs() -> None:
    # Act
    compute = RunConfig("compute", method="agm", digits=100, format="json")
    verify = RunConfig("verify")

    # Assert
    assert compute.workers == 1
    assert verify.digits is None
    assert str(verify) == "ramanujanpi RunConfig object (verify)"


@pytest.mark.unit
def test_invalid_configs() -> None:
    # Assert
    with pytest.raises(ValueError):
        RunConfig("draw")
    with pytest.raises(ValueError):
        RunConfig("catalog", format="xml")
    with pytest.raises(ValueError):
        RunConfig("compute", method="agm")
    with pytest.raises(ValueError):
        RunConfig("compute", method="machin", digits=10)
    with pytest.raises(ValueError):
        RunConfig("compute", method="agm", digits=0)
    with pytest.raises(ValueError):
        RunConfig("bench", digits=DIGITS_CAP + 1)
    with pytest.raises(ValueError):
        RunConfig("bench", digits=True)
    with pytest.raises(ValueError):
        RunConfig("compute", method="agm", digits=10, workers=0)
