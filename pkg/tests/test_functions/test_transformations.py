import numpy as np
import pytest

from ramanujanpi.core.modulus import Modulus
from ramanujanpi.core.precision import PrecisionContext
from ramanujanpi.functions.transformations import check_transformations


@pytest.mark.unit
def test_all_identities_for_small_k(ctx30) -> None:
    # Arrange
    m = Modulus.from_k("0.1", ctx30)

    # Act
    defects = check_transformations(m, ctx30)

    # Assert
    assert len(defects) == 12
    assert len({identity.name for identity in defects}) == 12
    for identity in defects:
        assert identity.defect < ctx30.tolerance(4)


@pytest.mark.unit
def test_identities_restricted_to_their_ranges(ctx30) -> None:
    # Arrange
    m = Modulus.from_k("0.5", ctx30)

    # Act
    defects = check_transformations(m, ctx30)

    # Assert
    assert len(defects) == 6
    assert all(identity.defect < ctx30.tolerance(4) for identity in defects)


@pytest.mark.unit
def test_no_identity_in_range(ctx30) -> None:
    # Arrange
    m = Modulus.from_k("0.95", ctx30)

    # Assert
    with pytest.raises(ValueError):
        check_transformations(m, ctx30)


@pytest.mark.unit
def test_identities_hold_across_their_ranges() -> None:
    # Arrange
    ctx = PrecisionContext(100)
    rng = np.random.default_rng(1729)
    # one band below each range boundary: 0.2119, sqrt(2)-1, 1/sqrt(2), 0.9102
    bands = [(0.001, 0.19), (0.223, 0.372), (0.435, 0.636), (0.742, 0.82)]
    covered = set()

    for low, high in bands:
        for k in rng.uniform(low, high, size=4):
            m = Modulus.from_k(k, ctx)

            # Act
            defects = check_transformations(m, ctx)

            # Assert
            assert all(identity.defect < ctx.tolerance(4) for identity in defects)
            covered.update(identity.name for identity in defects)

    assert len(covered) == 12


@pytest.mark.unit
def test_identities_at_the_closed_boundary(ctx30) -> None:
    # Arrange
    half = 1 / ctx30.mp.sqrt(2)
    m = Modulus(half, half)

    # Act
    defects = check_transformations(m, ctx30)

    # Assert
    assert len(defects) == 6
    assert sum("1/J" in identity.name for identity in defects) == 2
    assert all(identity.defect < ctx30.tolerance(4) for identity in defects)
