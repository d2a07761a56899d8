import pytest
from scipy import special

from ramanujanpi.core.modulus import Modulus
from ramanujanpi.functions.elliptic import (
    agm,
    dE_dk,
    dK_dk,
    ellip_e,
    ellip_e_quadrature,
    ellip_k,
    ellip_k_quadrature,
    legendre_defect,
    modulus_from_nome,
    nome,
    pi_agm,
    reciprocal_pi_agm,
    theta,
)


@pytest.mark.unit
def test_agm(ctx30) -> None:
    # Act
    mean = agm(24, 6, ctx30)

    # Assert
    assert agm(1, 1, ctx30) == 1
    assert abs(mean - ctx30.mp.agm(24, 6)) < ctx30.tolerance(2)
    with pytest.raises(ValueError):
        agm(0, 1, ctx30)
    with pytest.raises(ValueError):
        agm(1, -2, ctx30)


@pytest.mark.unit
def test_complete_integrals_against_scipy(ctx30, example_moduli) -> None:
    for m in example_moduli:
        # Arrange
        parameter = float(m.k) ** 2

        # Act
        K = ellip_k(m, ctx30)
        E = ellip_e(m, ctx30)

        # Assert
        assert float(K) == pytest.approx(special.ellipk(parameter), rel=1e-12)
        assert float(E) == pytest.approx(special.ellipe(parameter), rel=1e-12)


@pytest.mark.unit
def test_complete_integrals_against_quadrature(ctx30) -> None:
    # Arrange
    m = Modulus.from_k("0.6", ctx30)

    # Act
    K = ellip_k(m, ctx30)
    E = ellip_e(m, ctx30)

    # Assert
    assert abs(K - ellip_k_quadrature(m, ctx30)) < ctx30.tolerance(4)
    assert abs(E - ellip_e_quadrature(m, ctx30)) < ctx30.tolerance(4)


@pytest.mark.unit
def test_endpoint_values(ctx30) -> None:
    # Assert
    assert abs(ellip_k(0, ctx30) - ctx30.pi / 2) < ctx30.tolerance()
    assert abs(ellip_e(0, ctx30) - ctx30.pi / 2) < ctx30.tolerance()
    assert ellip_e(1, ctx30) == 1
    with pytest.raises(ValueError):
        ellip_k(1, ctx30)
    with pytest.raises(ValueError):
        ellip_k("-1/2", ctx30)


@pytest.mark.unit
def test_legendre_relation(ctx50, example_moduli) -> None:
    for m in example_moduli:
        # Act
        defect = legendre_defect(m, ctx50)

        # Assert
        assert abs(defect) < ctx50.tolerance(2)


@pytest.mark.unit
def test_derivatives(ctx30) -> None:
    # Arrange
    k = ctx30.convert("0.4")
    h = ctx30.convert("1e-10")

    # Act
    dK = dK_dk(k, ctx30)
    dE = dE_dk(k, ctx30)
    central_K = (ellip_k(k + h, ctx30) - ellip_k(k - h, ctx30)) / (2 * h)
    central_E = (ellip_e(k + h, ctx30) - ellip_e(k - h, ctx30)) / (2 * h)

    # Assert
    assert abs(dK - central_K) < 1e-15
    assert abs(dE - central_E) < 1e-15
    assert dK > 0 > dE


@pytest.mark.unit
def test_theta_and_nome(ctx30, example_moduli) -> None:
    # Arrange
    triple = theta("0.1", ctx30)

    # Assert
    assert abs(triple.jacobi_defect()) < ctx30.tolerance(2)
    for m in example_moduli[:4]:
        round_trip = modulus_from_nome(nome(m, ctx30), ctx30)
        assert abs(round_trip.k - m.k) < ctx30.tolerance(4)
    with pytest.raises(ValueError):
        theta(1, ctx30)


@pytest.mark.unit
def test_pi_from_agm(ctx50) -> None:
    # Act
    pi = pi_agm(ctx50)

    # Assert
    assert abs(pi - ctx50.pi) < ctx50.tolerance(2)
    assert abs(reciprocal_pi_agm(ctx50) * ctx50.pi - 1) < ctx50.tolerance(2)
