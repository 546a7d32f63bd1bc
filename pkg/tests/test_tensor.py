import pytest

from models.errors import ContractionError, InvalidKindError, InvalidProjectionError, ShapeError
from models.gaussian_rational import gr
from models.tensor import (IndexKind, IndexSpec, Tensor, Variance, brace_project, contract, epsilon_tensor, kronecker,
                           lower_index, matmul, metric_signs, permutation_sign, raise_index, trace)

ST6 = IndexKind.SPACETIME6
ST4 = IndexKind.SPACETIME4
UP, LO = Variance.UPPER, Variance.LOWER


def vector6(variance=UP):
    return Tensor.from_sparse(IndexSpec.of((ST6, variance)), {(A,): A + 1 for A in range(6)})


def test_metric_signature():
    assert metric_signs(ST6) == (1, -1, -1, -1, -1, -1)
    assert metric_signs(ST4) == (1, -1, -1, -1)
    with pytest.raises(InvalidKindError):
        metric_signs(IndexKind.SPINOR6)


def test_epsilon_orientations():
    assert epsilon_tensor(ST6, UP)[0, 1, 2, 3, 4, 5] == 1
    assert epsilon_tensor(ST6, LO)[0, 1, 2, 3, 4, 5] == -1
    assert epsilon_tensor(ST6, UP)[1, 0, 2, 3, 4, 5] == -1
    assert epsilon_tensor(ST4, LO)[0, 1, 2, 3] == 1
    assert epsilon_tensor(ST4, UP)[0, 1, 2, 3] == -1
    assert len(epsilon_tensor(ST6, UP).nonzero) == 720


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((2, 0, 1)) == 1
    assert permutation_sign((5, 3)) == -1
    assert permutation_sign((1, 1, 2)) == 0


def test_lower_then_raise_is_identity():
    v = vector6()
    lowered = lower_index(v, 0)
    assert lowered[0] == 1
    assert lowered[3] == -4
    assert raise_index(lowered, 0) == v
    with pytest.raises(ContractionError):
        lower_index(lowered, 0)


def test_contraction_requires_opposite_variance():
    v = vector6()
    with pytest.raises(ContractionError):
        contract(v, v, [(0, 0)])
    # v^A v_A with v = (1, ..., 6)
    norm = contract(v, lower_index(v, 0), [(0, 0)]).value()
    assert norm == 1 - 4 - 9 - 16 - 25 - 36


def test_kronecker_trace_and_matmul():
    delta = kronecker(IndexKind.SPINOR6)
    assert trace(delta).value() == 4
    assert matmul(delta, delta) == delta
    assert kronecker(IndexKind.SYMPLECTIC, 3).shape == (6, 6)


def test_antisymmetrization_is_a_projector():
    spec = IndexSpec.of((ST6, LO), (ST6, LO), (ST6, LO))
    t = Tensor.from_sparse(spec, {(0, 1, 2): 6, (1, 1, 3): 2, (2, 4, 5): gr(0, 1)})
    once = brace_project(t, [0, 1, 2], "antisym")
    assert brace_project(once, [0, 1, 2], "antisym") == once
    assert once[0, 1, 2] == 1
    assert once[1, 0, 2] == -1
    assert once[1, 1, 3] == 0
    symmetric = brace_project(t, [0, 1], "sym")
    assert symmetric[1, 0, 2] == 3


def test_projection_errors():
    spec = IndexSpec.of((ST6, LO), (ST6, UP))
    t = Tensor.zeros(spec)
    with pytest.raises(InvalidProjectionError):
        brace_project(t, [0, 1], "antisym")
    with pytest.raises(InvalidProjectionError):
        brace_project(t, [0], "hook")
    with pytest.raises(InvalidProjectionError):
        brace_project(t, [0, 0], "sym")


def test_shape_errors():
    with pytest.raises(ShapeError):
        Tensor.from_sparse(IndexSpec.of((ST6, UP)), {(6,): 1})
    with pytest.raises(ShapeError):
        vector6() + Tensor.zeros(IndexSpec.of((ST4, UP)))
    with pytest.raises(ShapeError):
        vector6().value()
