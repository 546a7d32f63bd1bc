import pytest

from models.susy.catalog import load_model
from models.susy.charges import Q
from models.susy.closure import bracket_kinds, check_closure, closure_residual, label_pair_count


def _assert_closes(report):
    failures = [(e.generator, e.bracket, e.first_failure) for e in report.entries if not e.passed]
    assert not failures
    assert report.passed


def test_rigid_six_dimensional_closure(rigid6):
    report = check_closure(rigid6)
    _assert_closes(report)
    assert report.expected_closure == "P"
    assert report.entry("B1", "Q,Q").pair_count == 4


def test_rigid_four_dimensional_closure(rigid4):
    _assert_closes(check_closure(rigid4))


def test_maxwell_closure_includes_gauge_charge(maxwell4):
    report = check_closure(maxwell4)
    _assert_closes(report)
    assert report.expected_closure == "P+Z"
    assert ("P", "Z") in bracket_kinds(maxwell4)


@pytest.mark.slow
def test_onshell_tensor_closure(onshell):
    _assert_closes(check_closure(onshell))


@pytest.mark.slow
def test_offshell_tensor_closure(offshell):
    _assert_closes(check_closure(offshell))


def test_onshell_scalar_closes_without_quotient(onshell_raw):
    for alpha in range(4):
        for beta in range(4):
            assert closure_residual(onshell_raw, Q(0, alpha), Q(1, beta), onshell_raw.jet("phi")).is_zero()


def test_symplectic_label_pairs_grow_with_N():
    model = load_model("6d-toy-rigid", N=3)
    assert label_pair_count(model, ("Q", "Q")) == 36
    assert len(model.charges("Q")) == 24


@pytest.mark.slow
def test_rigid_closure_for_three_pairs():
    report = check_closure(load_model("6d-toy-rigid", N=3))
    _assert_closes(report)
    assert report.N == 3


def test_closure_report_serializes(rigid4):
    data = check_closure(rigid4).to_dict()
    assert data['model'] == "4d-toy-rigid"
    assert data['pass'] is True
    assert all(e['residual'] is None for e in data['entries'])
