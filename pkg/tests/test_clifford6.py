from fractions import Fraction

import pytest

from models.clifford6 import build_gamma6, hodge_dual3, project_selfdual3, selfdual_dimension, three_form_basis
from models.errors import CatalogError, ConfigError, ShapeError
import models.identities6 as identities6
from models.identities6 import IDENTITY_IDS6, selfdual_checks, verify_identity6
from models.tensor import IndexKind, IndexSpec, Tensor, Variance, kronecker, matmul, trace

QUICK_IDENTITIES = ("ALGEBRA", "TR2", "HERM", "GTG", "ANTISYM_COMPLETE", "MINUS", "PLUS")


def test_catalog_has_twenty_identities():
    assert len(IDENTITY_IDS6) == 20
    assert set(QUICK_IDENTITIES) <= set(IDENTITY_IDS6)


@pytest.mark.parametrize("id", QUICK_IDENTITIES)
def test_quick_identities_hold_exactly(rep6, id):
    report = verify_identity6(rep6, id)
    assert report.passed, report.to_dict()
    assert report.max_residual_re == 0 and report.max_residual_im == 0
    assert report.first_failure is None


@pytest.mark.slow
@pytest.mark.parametrize("id", IDENTITY_IDS6)
def test_every_identity_holds_exactly(rep6, id):
    assert verify_identity6(rep6, id).passed


def test_unknown_identity(rep6):
    with pytest.raises(CatalogError):
        verify_identity6(rep6, "NOT_AN_IDENTITY")


def test_tilde_matrices_invert_gamma_zero(rep6):
    # gamma^0 gamma-tilde^0 = 1
    assert matmul(rep6.g(0), rep6.gt(0)).data == kronecker(IndexKind.SPINOR6).data


def test_symplectic_form(rep6_n2):
    e, e_bar = rep6_n2.symplectic, rep6_n2.symplectic_inv
    assert e[0, 1] == 1 and e[1, 0] == -1
    assert e_bar[0, 1] == -1
    assert matmul(e, e_bar) == kronecker(IndexKind.SYMPLECTIC, 2)
    # Ebar_ij E^ij = -2N
    total = sum((e_bar[i, j] * e[i, j] for i in range(4) for j in range(4)), Fraction(0))
    assert total == -4


def test_gamma_tilde_trace_contraction(rep6):
    # sum over A of tr(gamma^A gamma-tilde_A) = 4 * 6
    total = sum((trace(matmul(rep6.g(A), rep6.gt_low(A))).value() for A in range(6)), Fraction(0))
    assert total == 24


def test_selfdual_subspace_has_ten_dimensions(rep6):
    assert selfdual_dimension(rep6) == 10


def test_projector_splits_and_is_idempotent(rep6):
    for form in three_form_basis()[:6]:
        plus, minus = project_selfdual3(rep6, form)
        assert plus + minus == form
        again, rest = project_selfdual3(rep6, plus)
        assert again == plus
        assert rest.is_zero()
        assert hodge_dual3(rep6, plus).relabel(plus.spec) == plus


def test_double_dual_is_identity(rep6):
    for form in three_form_basis():
        dual = hodge_dual3(rep6, form).relabel(form.spec)
        assert hodge_dual3(rep6, dual).relabel(form.spec) == form


def test_selfdual_checks_hold(rep6):
    assert selfdual_checks(rep6) == {
        'selfdual_dimension_is_ten': True, 'projector_idempotent': True, 'double_dual_is_identity': True,
    }


def test_selfdual_checks_catch_a_broken_star(rep6, monkeypatch):
    monkeypatch.setattr(identities6, "hodge_dual3", lambda rep, H: H.scale(2))
    monkeypatch.setattr(identities6, "project_selfdual3", lambda rep, H: (H.scale(2), H.scale(-1)))
    monkeypatch.setattr(identities6, "selfdual_dimension", lambda rep: 9)
    assert selfdual_checks(rep6) == {
        'selfdual_dimension_is_ten': False, 'projector_idempotent': False, 'double_dual_is_identity': False,
    }


@pytest.mark.slow
def test_dual3_fails_when_the_projector_does(rep6, monkeypatch):
    assert verify_identity6(rep6, "DUAL3").notes['projector_idempotent'] == "true"
    monkeypatch.setattr(identities6, "selfdual_dimension", lambda rep: 9)
    report = verify_identity6(rep6, "DUAL3")
    assert report.max_residual_re == 0 and report.max_residual_im == 0
    assert not report.passed
    assert report.notes['selfdual_dimension_is_ten'] == "false"


def test_projection_rejects_non_forms(rep6):
    spec = IndexSpec.of(*([(IndexKind.SPACETIME6, Variance.LOWER)] * 3))
    not_antisymmetric = Tensor.from_sparse(spec, {(0, 1, 2): 1})
    with pytest.raises(ShapeError):
        project_selfdual3(rep6, not_antisymmetric)


def test_invalid_symplectic_rank():
    with pytest.raises(ConfigError):
        build_gamma6(0)
