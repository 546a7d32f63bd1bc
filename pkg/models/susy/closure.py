"""
Closure of the supersymmetry algebra on a model's generators.

Brackets of charges act through the graded Jacobi identity,
[[c1, c2}, X} = [c1, [c2, X}} - (-1)^{|c1||c2|} [c2, [c1, X}},
and are compared with the algebra's right-hand side: 2 E^{ij} gamma^A (P_A [+ Z_A])
in six dimensions, 2 sigma^mu (P_mu [+ Z_mu]) for {Q, Qbar} in four and zero
for every other pair.
"""

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from models.susy.charges import Charge
from models.susy.expression import Component, Expression, FieldGenerator, combine
from models.susy.model import Model, Target
from utils.logger import logger


def raw_bracket(model: Model, c1: Charge, c2: Charge, target: Target) -> Expression:
    inner_12 = model.act_raw(c1, model.act_raw(c2, target))
    inner_21 = model.act_raw(c2, model.act_raw(c1, target))
    sign = -1 if c1.parity and c2.parity else 1
    inner_12.accumulate(inner_21, -sign)
    return inner_12


def graded_bracket_on(model: Model, c1: Charge, c2: Charge, target: Target) -> Expression:
    """Action of {c1, c2} (two fermionic charges) or [c1, c2] on target, reduced by the quotient"""
    model.check_charge(c1)
    model.check_charge(c2)
    return model.reduce(raw_bracket(model, c1, c2, target))


def _momentum_plus_gauge(model: Model, A: int, target: Target) -> Expression:
    result = model.act_raw(Charge("P", (A,)), target)
    if model.expected_closure == "P+Z":
        result = result + model.act_raw(Charge("Z", (A,)), target)
    return result


def expected_bracket(model: Model, c1: Charge, c2: Charge, target: Target) -> Expression:
    """Right-hand side of the algebra for the pair (c1, c2), acting on target"""
    kinds = (c1.kind, c2.kind)
    if kinds == ("Q", "Q") and model.dimension == 6:
        (i, alpha), (j, beta) = c1.index, c2.index
        e = model.rep.symplectic[i, j]
        if not e:
            return Expression.zero()
        gamma = model.rep.gamma
        return combine(((2 * e * gamma[A, alpha, beta], _momentum_plus_gauge(model, A, target))
                        for A in range(6) if gamma[A, alpha, beta]))
    if kinds in (("Q", "Qbar"), ("Qbar", "Q")) and model.dimension == 4:
        alpha, ad = (c1.index[0], c2.index[0]) if c1.kind == "Q" else (c2.index[0], c1.index[0])
        sigma = model.rep.sigma
        return combine(((2 * sigma[mu, alpha, ad], _momentum_plus_gauge(model, mu, target))
                        for mu in range(4) if sigma[mu, alpha, ad]))
    return Expression.zero()


def closure_residual(model: Model, c1: Charge, c2: Charge, target: Target) -> Expression:
    """bracket - expected, reduced by the quotient when it is enabled"""
    residual = raw_bracket(model, c1, c2, target)
    residual.accumulate(expected_bracket(model, c1, c2, target), -1)
    return model.reduce(residual)


def bracket_kinds(model: Model) -> List[Tuple[str, str]]:
    kinds = model.charge_kinds
    pairs = []
    if model.dimension == 6:
        pairs.append(("Q", "Q"))
    else:
        pairs += [("Q", "Qbar"), ("Q", "Q"), ("Qbar", "Qbar")]
    fermionic = [k for k in ("Q", "Qbar") if k in kinds]
    pairs += [("P", k) for k in fermionic]
    pairs.append(("P", "P"))
    if "Z" in kinds:
        pairs.append(("P", "Z"))
    return pairs


def label_pair_count(model: Model, kinds: Tuple[str, str]) -> int:
    """Ordered pairs of internal labels: (2N)^2 symplectic pairs for six-dimensional supercharges"""
    if kinds == ("Q", "Q") and model.dimension == 6:
        return (2 * model.N) ** 2
    return len(model.charges(kinds[0])) * len(model.charges(kinds[1]))


def _charge_pairs(model: Model, kinds: Tuple[str, str]):
    first, second = model.charges(kinds[0]), model.charges(kinds[1])
    for c1 in first:
        for c2 in second:
            if kinds[0] == kinds[1] and c2 < c1:
                continue
            yield c1, c2


@dataclass
class ClosureEntry:
    generator: str
    bracket: str
    passed: bool
    pair_count: int
    tuple_count: int
    first_failure: Optional[str] = None
    residual: Optional[Dict[str, str]] = None

    def to_dict(self) -> Dict:
        return {
            'generator': self.generator,
            'bracket': self.bracket,
            'pass': self.passed,
            'pair_count': self.pair_count,
            'tuple_count': self.tuple_count,
            'first_failure': self.first_failure,
            'residual': self.residual,
        }


@dataclass
class ClosureReport:
    model: str
    N: int
    quotient: bool
    expected_closure: str
    entries: List[ClosureEntry] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, generator: str, bracket: str) -> ClosureEntry:
        for e in self.entries:
            if e.generator == generator and e.bracket == bracket:
                return e
        raise KeyError((generator, bracket))

    def to_dict(self) -> Dict:
        return {
            'model': self.model,
            'N': self.N,
            'quotient': self.quotient,
            'expected_closure': self.expected_closure,
            'pass': self.passed,
            'entries': [e.to_dict() for e in self.entries],
        }


def _check_generator(model: Model, gen: FieldGenerator, kinds: Tuple[str, str]) -> ClosureEntry:
    tuples = 0
    failure: Optional[Tuple[Charge, Charge, Component, Expression]] = None
    for comp in gen.components():
        target = Expression.jet(gen, comp)
        for c1, c2 in _charge_pairs(model, kinds):
            tuples += 1
            residual = closure_residual(model, c1, c2, target)
            if residual and failure is None:
                failure = (c1, c2, comp, residual)
    bracket = f"{kinds[0]},{kinds[1]}"
    entry = ClosureEntry(gen.id, bracket, failure is None, label_pair_count(model, kinds), tuples)
    if failure is not None:
        c1, c2, comp, residual = failure
        entry.first_failure = f"{c1} {c2} {gen.id}{list(comp)}"
        entry.residual = residual.to_dict()
    return entry


def check_closure(model: Model) -> ClosureReport:
    """Compare every bracket of elementary charges with the algebra on every generator component"""
    start = time.perf_counter()
    report = ClosureReport(model.name, model.N, model.quotient_enabled, model.expected_closure)
    for kinds in bracket_kinds(model):
        for gen in model.generators.values():
            entry = _check_generator(model, gen, kinds)
            report.entries.append(entry)
            if not entry.passed:
                logger.warning(f"Closure failed | Generator: {gen.id} | Bracket: {entry.bracket} | "
                               f"First failure: {entry.first_failure}", check=model.name)
    report.seconds = time.perf_counter() - start
    logger.info(f"Checked closure | Passed: {report.passed} | Entries: {len(report.entries)} | "
                f"Seconds: {report.seconds:.2f}", check=model.name)
    return report
