from fractions import Fraction

import pytest

from ramanujanpi.utils.arithmetic import (
    factorize,
    is_square,
    is_squarefree,
    positive_rational,
    squarefree_kernel,
)


@pytest.mark.unit
def test_factorize() -> None:
    # Assert
    assert factorize(1) == {}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(97) == {97: 1}
    with pytest.raises(ValueError):
        factorize(0)


@pytest.mark.unit
def test_squarefree() -> None:
    # Assert
    assert is_squarefree(58)
    assert not is_squarefree(18)
    assert not is_squarefree(0)
    assert squarefree_kernel(18) == 2
    assert squarefree_kernel(58) == 58
    assert squarefree_kernel(25) == 1


@pytest.mark.unit
def test_is_square() -> None:
    # Assert
    assert is_square(0)
    assert is_square(396**4)
    assert not is_square(58)
    assert not is_square(-4)


@pytest.mark.unit
def test_positive_rational() -> None:
    # Assert
    assert positive_rational(3) == 3
    assert positive_rational("5/2") == Fraction(5, 2)
    with pytest.raises(ValueError):
        positive_rational(Fraction(-1, 2))
    with pytest.raises(TypeError):
        positive_rational(2.5)
    with pytest.raises(TypeError):
        positive_rational(True)
