import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from models.errors import RuleError
from models.gaussian_rational import I
from models.susy.charges import Charge
from models.susy.expression import Component, Expression, FieldGenerator, JetField, JetKey
from models.susy.quotient import QuotientReducer

engine_logger = logging.getLogger("SusyVerifier.engine")

Rule = Callable[["Model", Tuple[int, ...], Component], Expression]
RelationBuilder = Callable[["Model"], List[Expression]]
Composite = Callable[["Model", Component], Expression]
Target = Union[Expression, JetField]

DEFAULT_JET_ORDER = 4


@dataclass
class Model:
    """
    A named rule set. ``rules`` maps (charge kind, generator id) to a function
    returning the action on one undifferentiated component; derivatives are
    distributed afterwards since every charge commutes with d. In field models
    P acts as -i d; rigid models carry explicit P rules instead.
    """
    name: str
    rep: object
    N: int
    dimension: int
    generators: Dict[str, FieldGenerator]
    rules: Dict[Tuple[str, str], Rule]
    charge_ranges: Dict[str, Tuple[int, ...]]
    expected_closure: str = "P"                 # "P" or "P+Z"
    derivative_momentum: bool = True
    relations: Dict[str, RelationBuilder] = field(default_factory=dict)
    composites: Dict[str, Composite] = field(default_factory=dict)
    jet_order: int = DEFAULT_JET_ORDER
    quotient_enabled: bool = True

    def __post_init__(self):
        self._act_cache: Dict[Tuple[Charge, JetKey], Expression] = {}
        self._relation_cache: Dict[str, List[Expression]] = {}
        self._reducers: Dict[FrozenSet[str], QuotientReducer] = {}
        self._tables: Dict[str, object] = {}

    def table(self, name: str, factory: Callable[[], object]):
        """Coefficient tensors derived from the representation, built once per model"""
        if name not in self._tables:
            self._tables[name] = factory()
        return self._tables[name]

    # charges

    @property
    def charge_kinds(self) -> Tuple[str, ...]:
        return tuple(self.charge_ranges)

    def charges(self, kind: str) -> List[Charge]:
        if kind not in self.charge_ranges:
            return []
        return [Charge(kind, index) for index in product(*(range(n) for n in self.charge_ranges[kind]))]

    def check_charge(self, charge: Charge):
        ranges = self.charge_ranges.get(charge.kind)
        if ranges is None:
            raise RuleError(f"Model {self.name} has no charge of kind {charge.kind}")
        if len(charge.index) != len(ranges) or any(not 0 <= v < n for v, n in zip(charge.index, ranges)):
            raise RuleError(f"Charge {charge} out of range for model {self.name}")

    # fields

    def generator(self, id: str) -> FieldGenerator:
        try:
            return self.generators[id]
        except KeyError:
            raise RuleError(f"Model {self.name} has no generator {id}")

    def jet(self, id: str, comp: Sequence[int] = (), deriv: Sequence[int] = (), coeff=1) -> Expression:
        return Expression.jet(self.generator(id), comp, deriv, coeff)

    def jet_field(self, id: str, comp: Sequence[int] = (), deriv: Sequence[int] = ()) -> JetField:
        gen = self.generator(id)
        sign, stored = gen.canonical(comp)
        if sign != 1:
            raise RuleError(f"Component {tuple(comp)} is not a stored component of {id}")
        return JetField(gen, stored, tuple(sorted(deriv)))

    def composite(self, name: str, comp: Sequence[int], deriv: Sequence[int] = ()) -> Expression:
        builder = self.composites.get(name)
        if builder is None:
            raise RuleError(f"Model {self.name} has no composite field {name}")
        return builder(self, tuple(comp)).differentiate(tuple(deriv), self.jet_order)

    def components(self) -> Iterator[Tuple[FieldGenerator, Component]]:
        for gen in self.generators.values():
            for comp in gen.components():
                yield gen, comp

    # action

    def _act_key(self, charge: Charge, key: JetKey) -> Expression:
        cached = self._act_cache.get((charge, key))
        if cached is not None:
            return cached
        gen_id, comp, deriv = key
        gen = self.generators[gen_id]
        if charge.kind == "P" and self.derivative_momentum:
            result = Expression.jet(gen, comp, deriv).differentiate(charge.index, self.jet_order).scale(-I)
        else:
            rule = self.rules.get((charge.kind, gen_id))
            if rule is None:
                raise RuleError(f"Model {self.name} has no rule for {charge.kind} on {gen_id}")
            base = rule(self, charge.index, comp)
            expected = charge.parity ^ gen.parity
            if base and base.parity != expected:
                raise RuleError(f"Rule {charge.kind} on {gen_id} returns parity {base.parity}, expected {expected}")
            result = base.differentiate(deriv, self.jet_order)
            result.parity = expected
        self._act_cache[(charge, key)] = result
        return result

    def act_raw(self, charge: Charge, target: Target) -> Expression:
        """Action of one charge, without quotient reduction"""
        if isinstance(target, JetField):
            target = Expression.of(target)
        result = Expression.zero()
        for key, coeff in target.terms.items():
            result.accumulate(self._act_key(charge, key), coeff)
        if target.parity is not None:
            result.parity = target.parity ^ charge.parity
        return result

    # quotient

    def relation(self, name: str) -> List[Expression]:
        if name not in self._relation_cache:
            builder = self.relations.get(name)
            if builder is None:
                raise RuleError(f"Model {self.name} has no quotient relation {name}")
            self._relation_cache[name] = builder(self)
        return self._relation_cache[name]

    def reducer(self, names: Optional[Iterable[str]] = None) -> QuotientReducer:
        chosen = frozenset(self.relations if names is None else names)
        reducer = self._reducers.get(chosen)
        if reducer is None:
            rows: List[Expression] = []
            for name in sorted(chosen):
                rows.extend(self.relation(name))
            reducer = QuotientReducer(rows, self.dimension, self.jet_order)
            self._reducers[chosen] = reducer
        return reducer

    def reduce(self, expr: Expression, names: Optional[Iterable[str]] = None) -> Expression:
        if not self.quotient_enabled and names is None:
            return expr
        return self.reducer(names).reduce(expr)

    # load-time checks

    def check_grading(self):
        """Evaluate every rule once; raises RuleError on a parity mismatch or a missing rule"""
        count = 0
        for kind in self.charge_kinds:
            if kind == "P" and self.derivative_momentum:
                continue
            for charge in self.charges(kind):
                for gen, comp in self.components():
                    self._act_key(charge, (gen.id, comp, ()))
                    count += 1
        engine_logger.debug(f"Checked rule grading | Model: {self.name} | Actions: {count}")

    def describe(self) -> Dict[str, object]:
        return {
            'model': self.name,
            'N': self.N,
            'jet_order': self.jet_order,
            'generators': sorted(self.generators),
            'expected_closure': self.expected_closure,
            'quotient': sorted(self.relations) if self.quotient_enabled else [],
        }


def act(model: Model, charge: Charge, target: Target) -> Expression:
    """[charge, target} in canonical form, reduced by the model quotient"""
    model.check_charge(charge)
    return model.reduce(model.act_raw(charge, target))
