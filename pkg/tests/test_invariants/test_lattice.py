import pytest

from ramanujanpi.invariants.classinv import class_invariants
from ramanujanpi.invariants.lattice import (
    lattice_sum_brute,
    lattice_sum_g,
    lattice_sum_k,
)
from ramanujanpi.invariants.singular import lambda_star


@pytest.mark.unit
def test_lattice_sum_at_one(ctx30) -> None:
    # Act
    value = lattice_sum_g(1, ctx30)

    # Assert
    assert abs(value + ctx30.pi / 2 * ctx30.mp.log(2)) < ctx30.tolerance(4)


@pytest.mark.unit
def test_lattice_sum_and_class_invariant(ctx30) -> None:
    for r in (2, 6, 10):
        # Arrange
        _, g = class_invariants(lambda_star(r, ctx30), ctx30)
        expected = -ctx30.pi / ctx30.mp.sqrt(r) * ctx30.mp.log(2 * g**4)

        # Act
        value = lattice_sum_g(r, ctx30)

        # Assert
        assert abs(value - expected) < ctx30.tolerance(6)


@pytest.mark.unit
def test_lattice_sum_and_singular_modulus(ctx30) -> None:
    # Arrange
    mp = ctx30.mp
    k = lambda_star(6, ctx30).k

    # Act
    value = lattice_sum_k(3, ctx30)

    # Assert
    assert abs(value + ctx30.pi / mp.sqrt(6) * mp.log(k / 4)) < ctx30.tolerance(6)


@pytest.mark.unit
def test_brute_force_truncation(ctx30) -> None:
    # Act
    brute = lattice_sum_brute(2.0)

    # Assert
    assert brute == pytest.approx(float(lattice_sum_g(2, ctx30)), abs=1e-5)
    with pytest.raises(ValueError):
        lattice_sum_brute(-1.0)
    with pytest.raises(ValueError):
        lattice_sum_brute(1.0, bound=0)
