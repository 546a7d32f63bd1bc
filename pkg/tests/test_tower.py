import pytest

from models.errors import ConfigError
from models.susy.charges import Q, Z
from models.susy.tower import check_tower, full_alphabet, gauge_tower, neutral_targets, tower_formula_residual


def _ids(reports):
    return [r.id for r in reports]


def test_maxwell_tower(maxwell4):
    reports = check_tower(maxwell4, depth=2)
    assert _ids(reports) == ["TOWER_ANNIHILATION", "TOWER_P_COMMUTES", "TOWER_FORMULA_1", "TOWER_FORMULA_2"]
    assert all(r.passed for r in reports)


def test_annihilation_covers_every_charge_up_to_depth_two(maxwell4):
    letters = full_alphabet(maxwell4)
    assert len(letters) == 8
    gauge = [c for c in letters if c.kind == "Z"]
    sequences = len(gauge) + len(letters) ** 2 - (len(letters) - len(gauge)) ** 2
    targets = neutral_targets(maxwell4)
    assert len(targets) == 10
    annihilation = check_tower(maxwell4, depth=2)[0]
    assert annihilation.id == "TOWER_ANNIHILATION"
    assert annihilation.tuple_count == sequences * len(targets) == 520


def test_depth_one_still_checks_momentum(maxwell4):
    reports = {r.id: r for r in check_tower(maxwell4, depth=1)}
    # [P_mu, Z_nu] on every A_lambda
    assert reports["TOWER_P_COMMUTES"].tuple_count == 4 * 4 * 4
    assert reports["TOWER_P_COMMUTES"].passed
    assert reports["TOWER_ANNIHILATION"].tuple_count == 4 * 10


@pytest.mark.slow
def test_maxwell_tower_full_depth(maxwell4):
    assert all(r.passed for r in check_tower(maxwell4))


def test_second_gauge_charge_on_maxwell_field(maxwell4):
    for mu in range(4):
        for nu in range(4):
            for lam in range(4):
                tower = gauge_tower(maxwell4, (Z(mu), Z(nu)), maxwell4.jet("A", (lam,)))
                assert tower == maxwell4.composite("F", (mu, nu), (lam,))


@pytest.mark.parametrize("n", [1, 2])
def test_six_dimensional_closed_forms(onshell, n):
    report = tower_formula_residual(onshell, n)
    assert report.passed
    assert report.tuple_count == 6 ** n * 15


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4])
def test_six_dimensional_closed_forms_deep(onshell, n):
    report = tower_formula_residual(onshell, n)
    assert report.passed
    assert report.tuple_count == 3 ** n * 15


@pytest.mark.slow
def test_onshell_tower(onshell):
    assert all(r.passed for r in check_tower(onshell, depth=3))


def test_tower_arguments(onshell, rigid4, maxwell4):
    with pytest.raises(ConfigError):
        gauge_tower(onshell, (Q(0, 0), Q(1, 0)), onshell.jet("phi"))
    with pytest.raises(ConfigError):
        gauge_tower(onshell, (), onshell.jet("phi"))
    with pytest.raises(ConfigError):
        check_tower(rigid4)
    with pytest.raises(ConfigError):
        check_tower(maxwell4, depth=5)
    with pytest.raises(ConfigError):
        tower_formula_residual(maxwell4, 0)
