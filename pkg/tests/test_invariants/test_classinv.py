import pytest

from ramanujanpi.core.modulus import Modulus
from ramanujanpi.invariants.classinv import (
    class_invariants,
    g4n_invariant,
    klein_j,
    modulus_from_G,
    modulus_from_g,
    x_invariant,
    y_invariant,
)
from ramanujanpi.invariants.singular import lambda_star


@pytest.mark.unit
def test_class_invariants_at_known_moduli(ctx30) -> None:
    # Arrange
    half = 1 / ctx30.mp.sqrt(2)
    m_1 = Modulus(half, half)
    m_3 = lambda_star(3, ctx30)

    # Act
    G_1, _ = class_invariants(m_1, ctx30)
    G_3, _ = class_invariants(m_3, ctx30)
    _, g_2 = class_invariants(lambda_star(2, ctx30), ctx30)

    # Assert
    assert abs(G_1 - 1) < ctx30.tolerance(2)
    assert abs(G_3**12 - 2) < ctx30.tolerance(4)
    assert abs(g_2 - 1) < ctx30.tolerance(4)


@pytest.mark.unit
def test_modulus_from_invariants(ctx30) -> None:
    # Arrange
    m = ctx30.mp
    m_3 = lambda_star(3, ctx30)
    m_10 = lambda_star(10, ctx30)
    _, g_10 = class_invariants(m_10, ctx30)

    # Act
    from_G = modulus_from_G(m.root(2, 12), ctx30)
    from_g = modulus_from_g(g_10, ctx30)
    at_one = modulus_from_G(1, ctx30)

    # Assert
    assert abs(from_G.k - m_3.k) < ctx30.tolerance(4)
    assert abs(from_g.k - m_10.k) < ctx30.tolerance(4)
    assert abs(at_one.k - 1 / m.sqrt(2)) < ctx30.tolerance(2)
    with pytest.raises(ValueError):
        modulus_from_G("1/2", ctx30)
    with pytest.raises(ValueError):
        modulus_from_g(0, ctx30)


@pytest.mark.unit
def test_klein_j(ctx30) -> None:
    # Arrange
    half = 1 / ctx30.mp.sqrt(2)

    # Act
    J_1 = klein_j(Modulus(half, half), ctx30)
    J_3 = klein_j(lambda_star(3, ctx30), ctx30)

    # Assert
    assert abs(J_1 - 1) < ctx30.tolerance(4)
    # j(sqrt(-3)) = 54000 = 1728 J
    assert abs(J_3 - ctx30.convert("125/4")) < ctx30.tolerance(6)


@pytest.mark.unit
def test_series_bases(ctx30) -> None:
    # Arrange
    m = Modulus.from_k("0.3", ctx30)
    G, g = class_invariants(m, ctx30)
    half = 1 / ctx30.mp.sqrt(2)

    # Act
    x = x_invariant(m, ctx30)
    y = y_invariant(m, ctx30)
    g4n = g4n_invariant(m, ctx30)

    # Assert
    assert 0 < x < 1
    assert abs(x - 2 / (g**12 + g**-12)) < ctx30.tolerance()
    assert abs(y - 2 / (G**12 - G**-12)) < ctx30.tolerance()
    assert abs(g4n - ctx30.mp.root(2, 4) * g * G) < ctx30.tolerance(2)
    with pytest.raises(ValueError):
        y_invariant(Modulus(half, half), ctx30)
