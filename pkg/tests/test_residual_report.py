from fractions import Fraction

import pytest

from models.errors import ShapeError
from models.gaussian_rational import gr
from models.residual_report import ResidualReport
from models.tensor import IndexKind, IndexSpec, Tensor, Variance

VECTOR4 = IndexSpec.of((IndexKind.SPACETIME4, Variance.UPPER))


def test_equal_tensors_pass():
    t = Tensor.from_sparse(VECTOR4, {(0,): 1, (2,): gr(0, 1)})
    report = ResidualReport.from_tensors("SAME", t, t)
    assert report.passed
    assert report.tuple_count == 4
    assert report.first_failure is None
    assert report.max_residual_re == 0


def test_worst_residual_and_first_failure():
    lhs = Tensor.from_sparse(VECTOR4, {(1,): gr(1, 2), (3,): gr(Fraction(-5, 2))})
    rhs = Tensor.zeros(VECTOR4)
    report = ResidualReport.from_tensors("DIFF", lhs, rhs)
    assert not report.passed
    assert report.first_failure == [1]
    assert report.max_residual_re == Fraction(5, 2)
    assert report.max_residual_im == 0


def test_shape_mismatch():
    other = IndexSpec.of((IndexKind.SPACETIME6, Variance.UPPER))
    with pytest.raises(ShapeError):
        ResidualReport.from_tensors("BAD", Tensor.zeros(VECTOR4), Tensor.zeros(other))


def test_parts_prefix_failing_tuples():
    zero = Tensor.zeros(VECTOR4)
    one = Tensor.from_sparse(VECTOR4, {(2,): 1})
    report = ResidualReport.from_parts("PARTS", [(zero, zero), (one, zero)])
    assert report.tuple_count == 8
    assert report.first_failure == [1, 2]


def test_dict_form():
    report = ResidualReport.from_residual("R", {(0, 1): gr(0, Fraction(1, 3))}, 10, informational=True)
    report.notes['b'] = "2"
    report.notes['a'] = "1"
    data = report.to_dict()
    assert data == {
        'id': "R",
        'pass': False,
        'tuple_count': 10,
        'max_residual_re': "0",
        'max_residual_im': "1/3",
        'first_failure': [0, 1],
        'informational': True,
        'notes': {'a': "1", 'b': "2"},
    }
    assert list(data['notes']) == ['a', 'b']
    assert ResidualReport.from_dict(data) == report
