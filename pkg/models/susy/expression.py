"""
Jets and linear expressions over jets.

A jet is a field generator component together with a sorted tuple of
derivative indices, ``d_{A1..Ak} X_{comp}``. An Expression is a finite linear
combination of jets with GaussianRational coefficients, stored as a dict keyed
by ``(generator id, component, derivative)``. Zero coefficients are never
stored, so two expressions are equal exactly when their dicts are equal.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

from models.errors import JetOrderError, RuleError
from models.gaussian_rational import ZERO, GaussianRational, Number
from models.tensor import IndexKind, IndexSlot, permutation_sign

Component = Tuple[int, ...]
Deriv = Tuple[int, ...]
JetKey = Tuple[str, Component, Deriv]

BOSON = 0
FERMION = 1


def _selfdual_canonical(comp: Component) -> Tuple[int, Optional[Component]]:
    """
    Self-dual three-forms keep the ten components that contain the index 0.
    A purely spatial component equals -sgn(ABCDEF) H_DEF with DEF the sorted
    complement, which always contains 0.
    """
    sign = permutation_sign(comp)
    if sign == 0:
        return 0, None
    ordered = tuple(sorted(comp))
    if ordered[0] == 0:
        return sign, ordered
    complement = tuple(i for i in range(6) if i not in ordered)
    return -sign * permutation_sign(ordered + complement), complement


@dataclass(frozen=True)
class FieldGenerator:
    """A named field with typed free indices and fixed Grassmann parity"""
    id: str
    slots: Tuple[IndexSlot, ...]
    parity: int
    symmetry: Optional[str] = None  # "antisym" or "selfdual3"
    label: str = ""

    def __post_init__(self):
        if self.parity not in (BOSON, FERMION):
            raise RuleError(f"Generator {self.id} has invalid parity {self.parity}")
        if self.symmetry not in (None, "antisym", "selfdual3"):
            raise RuleError(f"Generator {self.id} has unknown symmetry {self.symmetry}")
        if self.symmetry == "selfdual3" and (
                len(self.slots) != 3 or any(s.kind != IndexKind.SPACETIME6 for s in self.slots)):
            raise RuleError(f"Generator {self.id}: self-duality needs three six-dimensional indices")

    @property
    def is_fermion(self) -> bool:
        return self.parity == FERMION

    def canonical(self, comp: Sequence[int]) -> Tuple[int, Optional[Component]]:
        """(sign, stored component); sign 0 when the component vanishes identically"""
        comp = tuple(comp)
        if len(comp) != len(self.slots):
            raise RuleError(f"Generator {self.id} expects {len(self.slots)} indices, got {comp}")
        for value, slot in zip(comp, self.slots):
            if not 0 <= value < slot.dim:
                raise RuleError(f"Index {comp} out of range for generator {self.id}")
        if self.symmetry == "antisym":
            sign = permutation_sign(comp)
            return (0, None) if sign == 0 else (sign, tuple(sorted(comp)))
        if self.symmetry == "selfdual3":
            return _selfdual_canonical(comp)
        return 1, comp

    def components(self) -> Iterator[Component]:
        """Independent stored components in increasing order"""
        if self.symmetry == "antisym":
            yield from combinations(range(self.slots[0].dim), len(self.slots))
        elif self.symmetry == "selfdual3":
            for comp in combinations(range(6), 3):
                if comp[0] == 0:
                    yield comp
        else:
            yield from product(*(range(s.dim) for s in self.slots))


@dataclass(frozen=True)
class JetField:
    generator: FieldGenerator
    component: Component
    deriv: Deriv = ()

    @property
    def key(self) -> JetKey:
        return (self.generator.id, self.component, tuple(sorted(self.deriv)))

    @property
    def order(self) -> int:
        return len(self.deriv)


def jet_label(key: JetKey) -> str:
    gen, comp, deriv = key
    prefix = "".join(f"d{d}" for d in deriv)
    index = ",".join(str(c) for c in comp)
    body = f"{gen}[{index}]" if comp else gen
    return f"{prefix} {body}" if prefix else body


class Expression:
    """Linear combination of jets with a single Grassmann parity"""

    __slots__ = ("terms", "parity")

    def __init__(self, terms: Optional[Dict[JetKey, GaussianRational]] = None, parity: Optional[int] = None):
        self.terms: Dict[JetKey, GaussianRational] = {k: v for k, v in (terms or {}).items() if v}
        self.parity = parity

    @classmethod
    def zero(cls, parity: Optional[int] = None) -> "Expression":
        return cls({}, parity)

    @classmethod
    def jet(cls, generator: FieldGenerator, comp: Sequence[int], deriv: Sequence[int] = (),
            coeff: Number = 1) -> "Expression":
        sign, stored = generator.canonical(comp)
        if sign == 0:
            return cls.zero(generator.parity)
        value = GaussianRational.coerce(coeff) * sign
        return cls({(generator.id, stored, tuple(sorted(deriv))): value}, generator.parity)

    @classmethod
    def of(cls, field: JetField) -> "Expression":
        return cls.jet(field.generator, field.component, field.deriv)

    # algebra

    def _merged_parity(self, other: "Expression") -> Optional[int]:
        if self.parity is None or not self.terms:
            return other.parity if other.terms or self.parity is None else self.parity
        if other.parity is None or not other.terms:
            return self.parity
        if self.parity != other.parity:
            raise RuleError("Cannot add expressions of different Grassmann parity")
        return self.parity

    def accumulate(self, other: "Expression", coeff: Number = 1):
        """In-place self += coeff * other"""
        self.parity = self._merged_parity(other)
        coeff = GaussianRational.coerce(coeff)
        if not coeff:
            return
        terms = self.terms
        for key, value in other.terms.items():
            new = terms.get(key, ZERO) + value * coeff
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)

    def copy(self) -> "Expression":
        return Expression(dict(self.terms), self.parity)

    def __add__(self, other: "Expression") -> "Expression":
        result = self.copy()
        result.accumulate(other)
        return result

    def __sub__(self, other: "Expression") -> "Expression":
        result = self.copy()
        result.accumulate(other, -1)
        return result

    def __neg__(self) -> "Expression":
        return self.scale(-1)

    def scale(self, coeff: Number) -> "Expression":
        coeff = GaussianRational.coerce(coeff)
        return Expression({k: v * coeff for k, v in self.terms.items()}, self.parity)

    def differentiate(self, indices: Sequence[int], max_order: int) -> "Expression":
        """Apply d_{indices}; raises JetOrderError past the jet order"""
        if not indices:
            return self
        terms = {}
        for (gen, comp, deriv), value in self.terms.items():
            combined = tuple(sorted(deriv + tuple(indices)))
            if len(combined) > max_order:
                raise JetOrderError(
                    f"Derivative order {len(combined)} of {gen} exceeds jet order {max_order}")
            key = (gen, comp, combined)
            terms[key] = terms.get(key, ZERO) + value
        return Expression(terms, self.parity)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Expression):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, key: JetKey) -> GaussianRational:
        return self.terms.get(key, ZERO)

    def sectors(self) -> Dict[Tuple[str, int], Dict[JetKey, GaussianRational]]:
        """Split terms by (generator id, derivative order)"""
        result: Dict[Tuple[str, int], Dict[JetKey, GaussianRational]] = {}
        for key, value in self.terms.items():
            result.setdefault((key[0], len(key[2])), {})[key] = value
        return result

    def restrict(self, generators: Iterable[str]) -> "Expression":
        keep = set(generators)
        return Expression({k: v for k, v in self.terms.items() if k[0] in keep}, self.parity)

    def max_order(self) -> int:
        return max((len(k[2]) for k in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({v})*{jet_label(k)}" for k, v in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Expression({self})"

    def to_dict(self) -> Dict[str, str]:
        return {jet_label(k): str(v) for k, v in self.sorted_terms()}


def combine(pairs: Iterable[Tuple[Number, Expression]], parity: Optional[int] = None) -> Expression:
    """Sum of coeff * expression over the given pairs"""
    result = Expression.zero(parity)
    for coeff, expr in pairs:
        result.accumulate(expr, coeff)
    return result
