"""
Gauge charges built from Z: the tower T_(n) = [c1, [c2, ..., [c_{n-1}, c_n]]]
with at least one Z among the c's. Every such charge acts only on the gauge
field (B in six dimensions, A in four) and commutes with P.
"""

from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from models.errors import ConfigError
from models.gaussian_rational import I
from models.residual_report import ResidualReport
from models.susy.charges import Charge, P, Q, Qbar, Z, sequence_parity
from models.susy.expression import BOSON, Expression, combine
from models.susy.model import Model, Target
from models.susy.residuals import expression_report
from utils.logger import logger

MAX_TOWER_DEPTH = 4
FULL_ALPHABET_DEPTH = 2


def nested_action(model: Model, charges: Sequence[Charge], target: Target) -> Expression:
    """Unreduced action of [c1, [c2, ..., c_n]] via the graded Jacobi identity"""
    if len(charges) == 1:
        return model.act_raw(charges[0], target)
    head, rest = charges[0], list(charges[1:])
    sign = -1 if head.parity and sequence_parity(rest) else 1
    result = model.act_raw(head, nested_action(model, rest, target))
    result.accumulate(nested_action(model, rest, model.act_raw(head, target)), -sign)
    return result


def gauge_tower(model: Model, charges: Sequence[Charge], target: Target) -> Expression:
    """Action of the nested commutator on target, reduced by the quotient"""
    if not charges:
        raise ConfigError("A gauge tower needs at least one charge")
    if not any(c.kind == "Z" for c in charges):
        raise ConfigError("A gauge tower must contain a gauge charge Z")
    for charge in charges:
        model.check_charge(charge)
    return model.reduce(nested_action(model, charges, target))


def full_alphabet(model: Model) -> Tuple[Charge, ...]:
    """Every supercharge label and index and every gauge charge of the model"""
    return tuple(c for kind in ("Q", "Qbar", "Z") for c in model.charges(kind))


def tower_alphabet(model: Model) -> Tuple[Charge, ...]:
    """Sample for depths past FULL_ALPHABET_DEPTH: two supercharges of different label and two gauge charges"""
    if model.dimension == 6:
        return Q(0, 0), Q(1, 3), Z(0), Z(4)
    return Q(0), Qbar(1), Z(0), Z(2)


def tower_sequences(model: Model, depth: int, alphabet: Optional[Sequence[Charge]] = None) -> Iterator[Tuple[Charge, ...]]:
    """Charge sequences with at least one Z; the full alphabet up to FULL_ALPHABET_DEPTH, the sample beyond"""
    for n in range(1, depth + 1):
        if alphabet is not None:
            letters = tuple(alphabet)
        else:
            letters = full_alphabet(model) if n <= FULL_ALPHABET_DEPTH else tower_alphabet(model)
        for seq in product(letters, repeat=n):
            if any(c.kind == "Z" for c in seq):
                yield seq


def neutral_targets(model: Model) -> List[Tuple[str, Expression]]:
    """Fields the tower must annihilate: the matter fields and the gauge field strength"""
    targets = []
    for gen in model.generators.values():
        if gen.id in ("B", "A"):
            continue
        for comp in gen.components():
            targets.append((f"{gen.id}{list(comp)}", Expression.jet(gen, comp)))
    strength = "H" if model.dimension == 6 else "F"
    rank = 3 if model.dimension == 6 else 2
    for comp in combinations(range(model.dimension), rank):
        targets.append((f"{strength}{list(comp)}", model.composite(strength, comp)))
    return targets


def _gauge_field(model: Model) -> str:
    return "B" if model.dimension == 6 else "A"


# closed forms

def z2_on_b(model: Model, C: int, D: int, comp) -> Expression:
    """[Z_CD, B_AB] = d_A(d_D B_BC - d_C B_BD + eta_DB d_C phi - eta_CB d_D phi) - (A <-> B)"""
    from models.susy.rules.tensor6 import eta
    A, B = comp

    def half(X: int, Y: int) -> List:
        return [(1, model.jet("B", (Y, C), (X, D))), (-1, model.jet("B", (Y, D), (X, C))),
                (eta(D, Y), model.jet("phi", (), (X, C))), (-eta(C, Y), model.jet("phi", (), (X, D)))]

    return combine(half(A, B) + [(-c, e) for c, e in half(B, A)], BOSON)


def z2_on_a(model: Model, mu: int, nu: int, comp) -> Expression:
    """[[Z_mu, Z_nu], A_lambda] = d_lambda F_mu nu"""
    lam, = comp
    return model.composite("F", (mu, nu), (lam,))


def tower_formula(model: Model, indices: Sequence[int], comp) -> Expression:
    """
    prod_{j <= n-2} (-i d_{Cj}) applied to the two-charge result. The scalar
    terms of [Z_CD, B_AB] are kept at every depth.
    """
    if len(indices) == 1:
        return model.act_raw(Z(indices[0]), model.jet(_gauge_field(model), comp))
    last = z2_on_b if model.dimension == 6 else z2_on_a
    base = last(model, indices[-2], indices[-1], comp)
    prefix = tuple(indices[:-2])
    return base.differentiate(prefix, model.jet_order).scale((-I) ** len(prefix))


def tower_formula_residual(model: Model, n: int, alphabet: Optional[Sequence[int]] = None) -> ResidualReport:
    """Engine tower Z_{C1..Cn} on the gauge field against the closed form"""
    if not 1 <= n <= MAX_TOWER_DEPTH:
        raise ConfigError(f"Tower depth must lie in 1..{MAX_TOWER_DEPTH}, got {n}")
    gen = model.generator(_gauge_field(model))
    if alphabet is None:
        alphabet = range(model.dimension) if n <= 2 else (0, 1, 3)
    residuals: Dict[Tuple, Expression] = {}
    count = 0
    for indices in product(tuple(alphabet), repeat=n):
        charges = [Z(c) for c in indices]
        for comp in gen.components():
            count += 1
            lhs = nested_action(model, charges, Expression.jet(gen, comp))
            residuals[tuple(indices) + tuple(comp)] = model.reduce(lhs - tower_formula(model, indices, comp))
    return expression_report(f"TOWER_FORMULA_{n}", residuals, count)


def check_tower(model: Model, depth: int = MAX_TOWER_DEPTH) -> List[ResidualReport]:
    """Annihilation of neutral fields, commutation with P and the closed forms up to depth"""
    if "Z" not in model.charge_kinds:
        raise ConfigError(f"Model {model.name} has no gauge charge")
    if not 1 <= depth <= MAX_TOWER_DEPTH:
        raise ConfigError(f"Tower depth must lie in 1..{MAX_TOWER_DEPTH}, got {depth}")
    reports = []

    residuals: Dict[Tuple, Expression] = {}
    count = 0
    targets = neutral_targets(model)
    for s, seq in enumerate(tower_sequences(model, depth)):
        for t, (_, target) in enumerate(targets):
            count += 1
            residuals[(s, t)] = gauge_tower(model, seq, target)
    reports.append(expression_report("TOWER_ANNIHILATION", residuals, count))

    residuals, count = {}, 0
    gen = model.generator(_gauge_field(model))
    # [P_A, T] for every tower T one level below depth; at depth 1 this is [P_A, Z_B]
    for s, seq in enumerate(tower_sequences(model, max(depth - 1, 1))):
        for A in range(model.dimension):
            for comp in gen.components():
                count += 1
                residuals[(s, A) + comp] = model.reduce(
                    nested_action(model, (P(A),) + seq, Expression.jet(gen, comp)))
    reports.append(expression_report("TOWER_P_COMMUTES", residuals, count))

    for n in range(1, depth + 1):
        reports.append(tower_formula_residual(model, n))
    for report in reports:
        logger.info(f"Checked tower | Id: {report.id} | Passed: {report.passed} | Tuples: {report.tuple_count}",
                    check=model.name)
    return reports
