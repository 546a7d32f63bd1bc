"""
Typed dense tensors over GaussianRational.

A Tensor stores every component in row-major order over its IndexSpec. The
nonzero components are cached on first use and every algebraic operation
(contraction, projection, transposition) iterates over that cache, so sparse
objects such as Levi-Civita tensors or gamma matrices stay cheap to combine.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Callable, Dict, Iterable, Iterator, List, Sequence, Tuple

from sympy.combinatorics import Permutation

from models.errors import ContractionError, InvalidKindError, InvalidProjectionError, ShapeError
from models.gaussian_rational import ZERO, GaussianRational, Number

Index = Tuple[int, ...]


class IndexKind(Enum):
    """Index alphabets used by the identities and the engine"""
    SPACETIME6 = "spacetime6"
    SPACETIME4 = "spacetime4"
    SPINOR6 = "spinor6"
    SPINOR4_UNDOTTED = "spinor4-undotted"
    SPINOR4_DOTTED = "spinor4-dotted"
    SYMPLECTIC = "symplectic"

    def dimension(self, N: int = 1) -> int:
        if self == IndexKind.SYMPLECTIC:
            return 2 * N
        return {
            IndexKind.SPACETIME6: 6,
            IndexKind.SPACETIME4: 4,
            IndexKind.SPINOR6: 4,
            IndexKind.SPINOR4_UNDOTTED: 2,
            IndexKind.SPINOR4_DOTTED: 2,
        }[self]

    def is_spacetime(self) -> bool:
        return self in (IndexKind.SPACETIME6, IndexKind.SPACETIME4)


class Variance(Enum):
    UPPER = "upper"
    LOWER = "lower"

    def flipped(self) -> "Variance":
        return Variance.LOWER if self == Variance.UPPER else Variance.UPPER


@dataclass(frozen=True)
class IndexSlot:
    kind: IndexKind
    dim: int
    variance: Variance

    def __post_init__(self):
        if self.kind != IndexKind.SYMPLECTIC and self.dim != self.kind.dimension():
            raise ShapeError(f"Index of kind {self.kind.value} must have dimension {self.kind.dimension()}")
        if self.kind == IndexKind.SYMPLECTIC and (self.dim < 2 or self.dim % 2):
            raise ShapeError(f"Symplectic index dimension must be 2N, got {self.dim}")

    def with_variance(self, variance: Variance) -> "IndexSlot":
        return IndexSlot(self.kind, self.dim, variance)


@dataclass(frozen=True)
class IndexSpec:
    """Ordered list of index slots"""
    entries: Tuple[IndexSlot, ...] = ()

    @classmethod
    def of(cls, *pairs: Tuple[IndexKind, Variance], N: int = 1) -> "IndexSpec":
        return cls(tuple(IndexSlot(kind, kind.dimension(N), variance) for kind, variance in pairs))

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(slot.dim for slot in self.entries)

    @property
    def size(self) -> int:
        return prod(self.shape)

    def __add__(self, other: "IndexSpec") -> "IndexSpec":
        return IndexSpec(self.entries + other.entries)

    def select(self, positions: Iterable[int]) -> "IndexSpec":
        return IndexSpec(tuple(self.entries[p] for p in positions))

    def without(self, positions: Iterable[int]) -> "IndexSpec":
        skip = set(positions)
        return IndexSpec(tuple(s for p, s in enumerate(self.entries) if p not in skip))

    def index_tuples(self) -> Iterator[Index]:
        return product(*(range(d) for d in self.shape))

    def offset(self, index: Index) -> int:
        flat = 0
        for i, d in zip(index, self.shape):
            if not 0 <= i < d:
                raise ShapeError(f"Index {index} out of range for shape {self.shape}")
            flat = flat * d + i
        return flat


@dataclass(frozen=True)
class Tensor:
    """Dense immutable multi-index array of GaussianRational"""
    spec: IndexSpec
    data: Tuple[GaussianRational, ...]

    def __post_init__(self):
        if len(self.data) != self.spec.size:
            raise ShapeError(f"Tensor data length {len(self.data)} does not match shape {self.spec.shape}")

    # construction

    @classmethod
    def zeros(cls, spec: IndexSpec) -> "Tensor":
        t = cls(spec, (ZERO,) * spec.size)
        t.__dict__["nonzero"] = {}
        return t

    @classmethod
    def from_sparse(cls, spec: IndexSpec, entries: Dict[Index, Number]) -> "Tensor":
        data = [ZERO] * spec.size
        nonzero = {}
        for index, value in entries.items():
            value = GaussianRational.coerce(value)
            if not value:
                continue
            data[spec.offset(index)] = value
            nonzero[tuple(index)] = value
        t = cls(spec, tuple(data))
        t.__dict__["nonzero"] = nonzero
        return t

    @classmethod
    def from_function(cls, spec: IndexSpec, fn: Callable[..., Number]) -> "Tensor":
        return cls.from_sparse(spec, {index: fn(*index) for index in spec.index_tuples()})

    @classmethod
    def scalar(cls, value: Number) -> "Tensor":
        return cls.from_sparse(IndexSpec(), {(): value})

    # access

    @cached_property
    def nonzero(self) -> Dict[Index, GaussianRational]:
        return {index: v for index, v in zip(self.spec.index_tuples(), self.data) if v}

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.spec.shape

    def __getitem__(self, index) -> GaussianRational:
        if not isinstance(index, tuple):
            index = (index,)
        return self.data[self.spec.offset(index)]

    def value(self) -> GaussianRational:
        """The single component of a rank-0 tensor"""
        if self.rank != 0:
            raise ShapeError(f"Tensor of rank {self.rank} is not a scalar")
        return self.data[0]

    def is_zero(self) -> bool:
        return not self.nonzero

    # algebra

    def _check_same_shape(self, other: "Tensor"):
        if self.shape != other.shape:
            raise ShapeError(f"Shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_same_shape(other)
        entries = dict(self.nonzero)
        for index, v in other.nonzero.items():
            entries[index] = entries.get(index, ZERO) + v
        return Tensor.from_sparse(self.spec, entries)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __neg__(self) -> "Tensor":
        return Tensor.from_sparse(self.spec, {i: -v for i, v in self.nonzero.items()})

    def scale(self, factor: Number) -> "Tensor":
        factor = GaussianRational.coerce(factor)
        return Tensor.from_sparse(self.spec, {i: v * factor for i, v in self.nonzero.items()})

    def conj(self) -> "Tensor":
        return Tensor.from_sparse(self.spec, {i: v.conj() for i, v in self.nonzero.items()})

    def transpose(self, order: Sequence[int]) -> "Tensor":
        """Reorder axes: axis k of the result is axis order[k] of self"""
        if sorted(order) != list(range(self.rank)):
            raise ShapeError(f"Invalid axis order {order} for rank {self.rank}")
        spec = self.spec.select(order)
        return Tensor.from_sparse(spec, {tuple(i[p] for p in order): v for i, v in self.nonzero.items()})

    def relabel(self, spec: IndexSpec) -> "Tensor":
        """Same components under a different index specification of equal shape"""
        if spec.shape != self.shape:
            raise ShapeError(f"Cannot relabel shape {self.shape} as {spec.shape}")
        return Tensor.from_sparse(spec, dict(self.nonzero))

    def slice(self, position: int, value: int) -> "Tensor":
        """Fix one index, dropping it from the spec"""
        spec = self.spec.without([position])
        return Tensor.from_sparse(spec, {
            i[:position] + i[position + 1:]: v for i, v in self.nonzero.items() if i[position] == value
        })

    def dagger(self) -> "Tensor":
        """Conjugate transpose of a rank-2 tensor; both variances flip"""
        if self.rank != 2:
            raise ShapeError("dagger is defined for rank-2 tensors")
        a, b = self.spec.entries
        spec = IndexSpec((b.with_variance(b.variance.flipped()), a.with_variance(a.variance.flipped())))
        return Tensor.from_sparse(spec, {(j, i): v.conj() for (i, j), v in self.nonzero.items()})


def outer(a: Tensor, b: Tensor) -> Tensor:
    return contract(a, b, [])


def contract(a: Tensor, b: Tensor, pairs: Sequence[Tuple[int, int]]) -> Tensor:
    """Sum over paired indices; free indices keep the order a-then-b"""
    a_pos = [p for p, _ in pairs]
    b_pos = [q for _, q in pairs]
    if len(set(a_pos)) != len(a_pos) or len(set(b_pos)) != len(b_pos):
        raise ContractionError(f"Repeated position in contraction pairs {pairs}")
    for p, q in pairs:
        sa, sb = a.spec.entries[p], b.spec.entries[q]
        if sa.kind != sb.kind or sa.dim != sb.dim:
            raise ContractionError(f"Cannot contract {sa.kind.value}[{sa.dim}] with {sb.kind.value}[{sb.dim}]")
        if sa.variance == sb.variance:
            raise ContractionError(f"Contracted {sa.kind.value} indices must have opposite variance")
    a_free = [p for p in range(a.rank) if p not in a_pos]
    b_free = [q for q in range(b.rank) if q not in b_pos]
    spec = a.spec.select(a_free) + b.spec.select(b_free)

    grouped: Dict[Index, List[Tuple[Index, GaussianRational]]] = {}
    for index, v in b.nonzero.items():
        key = tuple(index[q] for q in b_pos)
        grouped.setdefault(key, []).append((tuple(index[q] for q in b_free), v))

    entries: Dict[Index, GaussianRational] = {}
    for index, v in a.nonzero.items():
        matches = grouped.get(tuple(index[p] for p in a_pos))
        if not matches:
            continue
        head = tuple(index[p] for p in a_free)
        for tail, w in matches:
            key = head + tail
            entries[key] = entries.get(key, ZERO) + v * w
    return Tensor.from_sparse(spec, entries)


def matmul(*factors: Tensor) -> Tensor:
    """Chain product contracting the last index of each factor with the first of the next"""
    result = factors[0]
    for factor in factors[1:]:
        result = contract(result, factor, [(result.rank - 1, 0)])
    return result


def trace(t: Tensor, first: int = 0, second: int = 1) -> Tensor:
    """Contract two indices of the same tensor"""
    sa, sb = t.spec.entries[first], t.spec.entries[second]
    if sa.kind != sb.kind or sa.dim != sb.dim:
        raise ContractionError(f"Cannot trace {sa.kind.value} with {sb.kind.value}")
    free = [p for p in range(t.rank) if p not in (first, second)]
    entries: Dict[Index, GaussianRational] = {}
    for index, v in t.nonzero.items():
        if index[first] == index[second]:
            key = tuple(index[p] for p in free)
            entries[key] = entries.get(key, ZERO) + v
    return Tensor.from_sparse(t.spec.select(free), entries)


def kronecker(kind: IndexKind, N: int = 1) -> Tensor:
    """delta^a_b with the upper index first"""
    dim = kind.dimension(N)
    spec = IndexSpec.of((kind, Variance.UPPER), (kind, Variance.LOWER), N=N)
    return Tensor.from_sparse(spec, {(i, i): 1 for i in range(dim)})


def metric_signs(kind: IndexKind) -> Tuple[int, ...]:
    if not kind.is_spacetime():
        raise InvalidKindError(f"No metric for index kind {kind.value}")
    return (1,) + (-1,) * (kind.dimension() - 1)


def metric(kind: IndexKind, variance: Variance) -> Tensor:
    """eta = diag(+1, -1, ..., -1); identical components up and down"""
    signs = metric_signs(kind)
    spec = IndexSpec.of((kind, variance), (kind, variance))
    return Tensor.from_sparse(spec, {(i, i): s for i, s in enumerate(signs)})


@lru_cache(maxsize=None)
def signed_permutations(k: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """All permutations of range(k) with their signs"""
    return tuple((p, Permutation(list(p)).signature()) for p in permutations(range(k)))


def permutation_sign(values: Sequence[int]) -> int:
    """Sign of the permutation sorting values; 0 when a value repeats"""
    if len(set(values)) != len(values):
        return 0
    ranks = sorted(range(len(values)), key=lambda p: values[p])
    return Permutation(ranks).signature()


@lru_cache(maxsize=None)
def epsilon_tensor(kind: IndexKind, variance: Variance) -> Tensor:
    """
    Totally antisymmetric tensor of rank equal to the spacetime dimension.
    Six dimensions: eps^{012345} = 1. Four dimensions: eps_{0123} = 1, so
    eps^{0123} = -1. The partner is obtained by lowering (raising) every index.
    """
    if not kind.is_spacetime():
        raise InvalidKindError(f"Levi-Civita tensor is defined for spacetime kinds, not {kind.value}")
    dim = kind.dimension()
    base_variance = Variance.UPPER if kind == IndexKind.SPACETIME6 else Variance.LOWER
    det = prod(metric_signs(kind))
    factor = 1 if variance == base_variance else det
    spec = IndexSpec.of(*([(kind, variance)] * dim))
    entries = {p: factor * sign for p, sign in signed_permutations(dim)}
    return Tensor.from_sparse(spec, entries)


def _move_last_to(t: Tensor, position: int) -> Tensor:
    order = list(range(t.rank - 1))
    order.insert(position, t.rank - 1)
    return t.transpose(order)


def lower_index(t: Tensor, position: int) -> Tensor:
    slot = t.spec.entries[position]
    if slot.variance != Variance.UPPER:
        raise ContractionError(f"Index {position} is already lower")
    lowered = contract(t, metric(slot.kind, Variance.LOWER), [(position, 0)])
    return _move_last_to(lowered, position)


def raise_index(t: Tensor, position: int) -> Tensor:
    slot = t.spec.entries[position]
    if slot.variance != Variance.LOWER:
        raise ContractionError(f"Index {position} is already upper")
    raised = contract(t, metric(slot.kind, Variance.UPPER), [(position, 0)])
    return _move_last_to(raised, position)


def brace_project(t: Tensor, positions: Sequence[int], mode: str) -> Tensor:
    """
    Strength-one (anti)symmetrization over the given positions:
    (1/k!) * sum over permutations, signed when mode is 'antisym'.
    """
    if mode not in ("sym", "antisym"):
        raise InvalidProjectionError(f"Unknown projection mode {mode!r}")
    positions = list(positions)
    if len(set(positions)) != len(positions):
        raise InvalidProjectionError(f"Repeated projection position in {positions}")
    slots = [t.spec.entries[p] for p in positions]
    if any(s != slots[0] for s in slots):
        raise InvalidProjectionError(f"Positions {positions} do not share kind, dimension and variance")
    k = len(positions)
    weight = GaussianRational(1) / factorial(k)
    entries: Dict[Index, GaussianRational] = {}
    for index, v in t.nonzero.items():
        scaled = v * weight
        chosen = [index[p] for p in positions]
        for perm, sign in signed_permutations(k):
            key = list(index)
            for slot_pos, source in zip(positions, perm):
                key[slot_pos] = chosen[source]
            key = tuple(key)
            term = scaled if (mode == "sym" or sign > 0) else -scaled
            entries[key] = entries.get(key, ZERO) + term
    return Tensor.from_sparse(t.spec, entries)


def stack(tensors: Sequence[Tensor], slot: IndexSlot) -> Tensor:
    """Stack equally shaped tensors along a new leading index"""
    if len(tensors) != slot.dim:
        raise ShapeError(f"Expected {slot.dim} tensors to stack, got {len(tensors)}")
    spec = IndexSpec((slot,)) + tensors[0].spec
    entries = {}
    for position, t in enumerate(tensors):
        if t.shape != tensors[0].shape:
            raise ShapeError("Cannot stack tensors of different shapes")
        for index, v in t.nonzero.items():
            entries[(position,) + index] = v
    return Tensor.from_sparse(spec, entries)
