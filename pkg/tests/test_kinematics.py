from fractions import Fraction

import pytest

from models.errors import CatalogError, ConfigError
from models.kinematics import (KINEMATIC_MODELS, SolutionBasis, assemble_system, check_kinematics, degree_bound_report,
                               degree_profile, degree_profile_report, match_template, nullspace_basis,
                               resubstitution_check)
from models.kinematics.ansatz import monomials


@pytest.fixture(scope="module")
def killing_basis():
    return nullspace_basis(assemble_system("KILLING4", 2))


@pytest.fixture(scope="module")
def master_basis():
    return nullspace_basis(assemble_system("MASTER6", 1))


def test_monomial_order():
    assert monomials(2, 1) == ((0, 0), (1, 0), (0, 1))
    assert len(monomials(4, 2)) == 15
    assert len(monomials(6, 3)) == 84


def test_constant_fields_have_no_equations():
    system = assemble_system("KILLING4", 0)
    assert system.shape == (0, 4)
    assert nullspace_basis(system).dimension == 4


def test_conformal_killing_dimension(killing_basis):
    assert killing_basis.dimension == 15
    assert killing_basis.max_degree() == 2


def test_conformal_killing_profile():
    assert degree_profile("KILLING4") == {0: 4, 1: 11, 2: 15, 3: 15}


def test_two_form_dimension(master_basis):
    assert master_basis.dimension == 31
    assert master_basis.max_degree() == 1


@pytest.mark.slow
def test_two_form_profile():
    assert degree_profile("MASTER6") == {0: 15, 1: 31, 2: 31, 3: 31}


def test_templates_span_the_solutions(killing_basis, master_basis):
    killing = match_template(killing_basis, "F12")
    assert killing.match
    assert killing.missing_directions == 0
    assert killing.change_of_basis is not None
    assert len(killing.to_dict()['change_of_basis']) == 15
    master = match_template(master_basis, "EQ27")
    assert master.match
    assert master.dimension == 31


def test_dropping_a_solution_breaks_the_match(killing_basis):
    report = match_template(killing_basis.without(0), "F12")
    assert not report.match
    assert report.missing_directions == 1
    assert report.change_of_basis is None


def test_template_errors(killing_basis):
    with pytest.raises(CatalogError):
        match_template(killing_basis, "EQ27")
    with pytest.raises(CatalogError):
        match_template(killing_basis, "F99")
    with pytest.raises(CatalogError):
        match_template(nullspace_basis(assemble_system("KILLING4", 1)), "F12")


def test_resubstitution(killing_basis, master_basis):
    assert resubstitution_check(killing_basis, points=3).passed
    report = resubstitution_check(master_basis, points=3)
    assert report.passed
    assert report.id == "MASTER6_RESUBSTITUTION"


def test_resubstitution_catches_a_non_solution(killing_basis):
    ansatz = killing_basis.ansatz
    vector = [Fraction(0)] * ansatz.unknown_count
    # A_0 = x0^2
    vector[ansatz.unknown(0, ansatz.monomials.index((2, 0, 0, 0)))] = Fraction(1)
    report = resubstitution_check(SolutionBasis(ansatz, [vector]), points=5)
    assert not report.passed


def test_check_kinematics_reports():
    match, reports = check_kinematics("KILLING4", degree=2)
    assert match.match
    assert [r.id for r in reports] == ["KILLING4_RESUBSTITUTION", "KILLING4_DEGREE_PROFILE", "KILLING4_DEGREE_BOUND"]
    assert all(r.passed for r in reports)
    assert reports[1].notes == {'0': "4", '1': "11", '2': "15", 'stable_from': "2"}
    assert reports[2].notes == {'max_degree': "2", 'bound': "2"}


def test_kinematics_arguments():
    with pytest.raises(ConfigError):
        assemble_system("KILLING4", 4)
    with pytest.raises(ConfigError):
        assemble_system("MASTER6", -1)
    with pytest.raises(CatalogError):
        assemble_system("WAVE3", 1)


def test_degree_bounds_differ_per_model():
    assert KINEMATIC_MODELS['MASTER6'].degree_bound == 1
    assert KINEMATIC_MODELS['KILLING4'].degree_bound == 2


def test_quadratic_two_form_fails_the_bound(master_basis):
    assert degree_bound_report(master_basis).passed
    ansatz = assemble_system("MASTER6", 2).ansatz
    vector = [Fraction(0)] * ansatz.unknown_count
    # B_01 = x2 x3
    vector[ansatz.unknown(0, ansatz.monomials.index((0, 0, 1, 1, 0, 0)))] = Fraction(1)
    report = degree_bound_report(SolutionBasis(ansatz, [vector]))
    assert report.id == "MASTER6_DEGREE_BOUND"
    assert not report.passed
    assert report.notes == {'max_degree': "2", 'bound': "1"}


def test_degree_profile_must_settle_at_the_bound():
    assert degree_profile_report("MASTER6", {0: 15, 1: 31, 2: 31, 3: 31}).passed
    assert not degree_profile_report("MASTER6", {0: 15, 1: 31, 2: 32, 3: 32}).passed
    assert degree_profile_report("KILLING4", {0: 4, 1: 11, 2: 15, 3: 15}).passed
    assert not degree_profile_report("KILLING4", {0: 4, 1: 11, 2: 15, 3: 16}).passed
    # too shallow to reach the bound: only monotonicity applies
    assert degree_profile_report("KILLING4", {0: 4, 1: 11}).passed
