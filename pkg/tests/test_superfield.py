import pytest

from models.errors import ConfigError
from models.susy.superfield import (GRASSMANN_COUNT, check_superfield, multiply, product_sign, superfield_expand,
                                    theta)


def test_grassmann_monomials():
    assert theta(1, 2) == 6
    assert multiply(3, (1, 5)) == (-1, (1, 3, 5))
    assert multiply(0, (1, 5)) == (1, (0, 1, 5))
    assert multiply(5, (1, 5)) == (0, None)
    assert product_sign((2, 1)) == (-1, (1, 2))
    assert product_sign((1, 2, 1)) == (0, None)


def test_first_order_is_the_spinor(offshell):
    expansion = superfield_expand(offshell, max_order=1)
    assert expansion.coefficient(()) == offshell.jet("phi")
    # thetabar_1 = theta^0 Ebar_01 = -theta^0
    assert expansion.coefficient((theta(0, 0),)) == offshell.jet("psi", (1, 0)).scale(-1)
    assert expansion.coefficient((theta(1, 2),)) == offshell.jet("psi", (0, 2))
    assert len(expansion.order(1)) == 8


def test_low_orders_match_closed_forms(offshell):
    reports = check_superfield(offshell, max_order=2)
    assert [r.id for r in reports] == ["SUPERFIELD_ORDER_0", "SUPERFIELD_ORDER_1", "SUPERFIELD_ORDER_2"]
    assert all(r.passed for r in reports)


@pytest.mark.slow
def test_full_expansion_terminates(offshell):
    reports = check_superfield(offshell)
    assert reports[-1].id == "SUPERFIELD_TERMINATES"
    assert all(r.passed for r in reports)


def test_expansion_arguments(offshell, onshell):
    with pytest.raises(ConfigError):
        superfield_expand(onshell)
    with pytest.raises(ConfigError):
        superfield_expand(offshell, max_order=GRASSMANN_COUNT + 1)
    with pytest.raises(ConfigError):
        superfield_expand(offshell, max_order=-1)
