import pytest

from models.errors import CatalogError
from models.identities4 import IDENTITY_IDS4, verify_identity4
from models.tensor import IndexKind, kronecker, matmul


def test_catalog_has_nine_identities():
    assert len(IDENTITY_IDS4) == 9


@pytest.mark.parametrize("id", IDENTITY_IDS4)
def test_identities_hold_exactly(rep4, id):
    report = verify_identity4(rep4, id)
    assert report.passed, report.to_dict()
    assert report.tuple_count > 0


def test_sigma_conventions(rep4):
    # sigma^0 = sigma-tilde^0 = 1 and sigma-tilde^k = -sigma^k
    assert rep4.s(0).data == kronecker(IndexKind.SPINOR4_UNDOTTED).data
    for k in (1, 2, 3):
        assert rep4.st(k).data == (-rep4.s(k)).data
    assert rep4.eps2[0, 1] == 1
    assert rep4.eps4_down[0, 1, 2, 3] == 1
    assert rep4.eps4_up[0, 1, 2, 3] == -1


def test_clifford_relation_for_distinct_indices(rep4):
    product = matmul(rep4.s(1), rep4.st(2)) + matmul(rep4.s(2), rep4.st(1))
    assert product.is_zero()


def test_unknown_identity(rep4):
    with pytest.raises(CatalogError):
        verify_identity4(rep4, "FTR6")
