import pytest

from ramanujanpi.core.modulus import Modulus


@pytest.mark.unit
def test_from_k(ctx30) -> None:
    # Act
    m = Modulus.from_k("3/5", ctx30)

    # Assert
    assert abs(m.kprime - ctx30.convert("4/5")) < ctx30.tolerance()
    assert abs(m.defect()) < ctx30.tolerance()


@pytest.mark.unit
def test_from_kprime_and_complement(ctx30) -> None:
    # Act
    m = Modulus.from_kprime("4/5", ctx30)
    complement = m.complement()

    # Assert
    assert abs(m.k - ctx30.convert("3/5")) < ctx30.tolerance()
    assert complement.k == m.kprime
    assert complement.kprime == m.k


@pytest.mark.unit
def test_endpoints_rejected(ctx30) -> None:
    # Assert
    with pytest.raises(ValueError):
        Modulus.from_k(0, ctx30)
    with pytest.raises(ValueError):
        Modulus.from_k(1, ctx30)
    with pytest.raises(ValueError):
        Modulus.from_kprime("3/2", ctx30)
    with pytest.raises(ValueError):
        Modulus(ctx30.convert(0), ctx30.convert(1))
