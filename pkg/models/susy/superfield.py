"""
Superfield expansion Phi = exp(i thetabar Q) phi exp(-i thetabar Q) of the
off-shell six-dimensional multiplet at N=1.

The eight Grassmann coordinates theta^{j alpha} are numbered a = 4j + alpha
and a monomial is the increasing tuple of its coordinates.
thetabar_i^alpha = theta^{j alpha} Ebar_{ji}.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, Iterable, List, Optional, Tuple

from models.errors import ConfigError
from models.gaussian_rational import I
from models.susy.charges import Q
from models.susy.expression import BOSON, Expression
from models.susy.model import Model
from models.susy.residuals import expression_report
from models.residual_report import ResidualReport
from models.susy.rules.tensor6 import TRIPLES
from utils.logger import logger

Monomial = Tuple[int, ...]
Polynomial = Dict[Monomial, Expression]

GRASSMANN_COUNT = 8
OFFSHELL = "6d-tensor-offshell"


def theta(j: int, alpha: int) -> int:
    return 4 * j + alpha


def multiply(a: int, monomial: Monomial) -> Tuple[int, Optional[Monomial]]:
    """theta^a * monomial as (sign, sorted monomial); sign 0 when theta^a already occurs"""
    if a in monomial:
        return 0, None
    position = sum(1 for m in monomial if m < a)
    return (-1) ** position, monomial[:position] + (a,) + monomial[position:]


def product_sign(coords: Iterable[int]) -> Tuple[int, Optional[Monomial]]:
    """Sign and sorted monomial of theta^{c1} theta^{c2} ..."""
    sign, monomial = 1, ()
    for a in reversed(tuple(coords)):
        s, monomial = multiply(a, monomial)
        if not s:
            return 0, None
        sign *= s
    return sign, monomial


def _add(poly: Polynomial, monomial: Monomial, expr: Expression, coeff=1):
    if monomial in poly:
        poly[monomial].accumulate(expr, coeff)
    else:
        poly[monomial] = expr.scale(coeff)


def adjoint(model: Model, poly: Polynomial) -> Polynomial:
    """[thetabar_i Q^i, M Y] = sum theta^{j alpha} (-1)^|M| M Ebar_ji [Q^i_alpha, Y}"""
    e_bar = model.rep.symplectic_inv
    result: Polynomial = {}
    for monomial, expr in poly.items():
        if not expr:
            continue
        grade = (-1) ** len(monomial)
        for j, alpha in product(range(2), range(4)):
            sign, target = multiply(theta(j, alpha), monomial)
            if not sign:
                continue
            for i in range(2):
                c = e_bar[j, i]
                if c:
                    _add(result, target, model.act_raw(Q(i, alpha), expr), c * sign * grade)
    return {m: e for m, e in result.items() if e}


@dataclass
class SuperfieldExpansion:
    """theta-monomial -> component coefficient, grouped by order"""
    max_order: int
    terms: Polynomial = field(default_factory=dict)

    def order(self, k: int) -> Polynomial:
        return {m: e for m, e in self.terms.items() if len(m) == k}

    def coefficient(self, monomial: Iterable[int]) -> Expression:
        sign, ordered = product_sign(monomial)
        if not sign or ordered not in self.terms:
            return Expression.zero()
        return self.terms[ordered].scale(sign)

    def to_dict(self) -> Dict[str, Dict[str, str]]:
        return {"".join(f"t{a}" for a in m) or "1": e.to_dict() for m, e in sorted(self.terms.items())}


def superfield_expand(model: Model, max_order: int = GRASSMANN_COUNT) -> SuperfieldExpansion:
    """Sum of (i^k / k!) ad^k phi for k up to max_order, unreduced"""
    if model.name != OFFSHELL or model.N != 1:
        raise ConfigError(f"Superfield expansion needs {OFFSHELL} at N=1, got {model.name} N={model.N}")
    if not 0 <= max_order <= GRASSMANN_COUNT:
        raise ConfigError(f"Superfield order must lie in 0..{GRASSMANN_COUNT}, got {max_order}")
    current: Polynomial = {(): model.jet("phi")}
    expansion = SuperfieldExpansion(max_order, {(): model.jet("phi")})
    for k in range(1, max_order + 1):
        current = adjoint(model, current)
        weight = I ** k / factorial(k)
        for monomial, expr in current.items():
            _add(expansion.terms, monomial, expr, weight)
        logger.debug(f"Expanded superfield | Order: {k} | Monomials: {len(current)}", check=model.name)
    expansion.terms = {m: e for m, e in expansion.terms.items() if e}
    return expansion


# closed forms of the low orders

def _weighted_thetabar(model: Model, i: int, alpha: int):
    e_bar = model.rep.symplectic_inv
    return [(e_bar[j, i], theta(j, alpha)) for j in range(2) if e_bar[j, i]]


def _accumulate_product(poly: Polynomial, factors, expr: Expression, coeff):
    """Add coeff * (product of (c, coordinate) factor sums) * expr"""
    for choice in product(*factors):
        c = coeff
        for value, _ in choice:
            c = c * value
        sign, monomial = product_sign(a for _, a in choice)
        if sign:
            _add(poly, monomial, expr, c * sign)


def closed_form_order(model: Model, k: int) -> Polynomial:
    """
    phi + thetabar_i psi^i + (i/8) thetabar_i gamma^[A gamma-tilde^B gamma^C] theta^i H_ABC
      + (i/3) thetabar_i gamma^A theta^j thetabar_j d_A psi^i
      + (1/12) thetabar_i gamma^A theta^j thetabar_j gamma^B theta^i d_A d_B phi + ...
    The order-four entry holds the phi terms only.
    """
    g, g3 = model.rep.gamma, model.rep.g3
    poly: Polynomial = {}
    if k == 0:
        poly[()] = model.jet("phi")
    elif k == 1:
        for i, alpha in product(range(2), range(4)):
            _accumulate_product(poly, [_weighted_thetabar(model, i, alpha)], model.jet("psi", (i, alpha)), 1)
    elif k == 2:
        for i, alpha, beta in product(range(2), range(4), range(4)):
            h = Expression.zero(BOSON)
            for triple in TRIPLES:
                if g3[triple + (alpha, beta)]:
                    h.accumulate(model.jet("H", triple), 6 * g3[triple + (alpha, beta)])
            if h:
                _accumulate_product(poly, [_weighted_thetabar(model, i, alpha), [(1, theta(i, beta))]],
                                    h, I / 8)
    elif k == 3:
        for i, j, alpha, beta, gamma_, A in product(range(2), range(2), range(4), range(4), range(4), range(6)):
            c = g[A, alpha, beta]
            if c:
                _accumulate_product(poly, [_weighted_thetabar(model, i, alpha), [(1, theta(j, beta))],
                                           _weighted_thetabar(model, j, gamma_)],
                                    model.jet("psi", (i, gamma_), (A,)), c * I / 3)
    elif k == 4:
        for i, j, alpha, beta, gamma_, delta in product(range(2), range(2), range(4), range(4), range(4), range(4)):
            for A, B in product(range(6), repeat=2):
                c = g[A, alpha, beta] * g[B, gamma_, delta]
                if c:
                    _accumulate_product(poly, [_weighted_thetabar(model, i, alpha), [(1, theta(j, beta))],
                                               _weighted_thetabar(model, j, gamma_), [(1, theta(i, delta))]],
                                        model.jet("phi", (), (A, B)), c * Fraction(1, 12))
    else:
        raise ConfigError(f"No closed form recorded for superfield order {k}")
    return {m: e for m, e in poly.items() if e}


def compare_order(model: Model, expansion: SuperfieldExpansion, k: int) -> ResidualReport:
    """Engine coefficients of order k against the closed form, modulo the quotient"""
    closed = closed_form_order(model, k)
    engine = expansion.order(k)
    residuals = {}
    for monomial in sorted(set(closed) | set(engine)):
        residual = engine.get(monomial, Expression.zero()) - closed.get(monomial, Expression.zero())
        residual = model.reduce(residual, model.relations)
        if k == 4:
            residual = residual.restrict(("phi",))
        residuals[monomial] = residual
    return expression_report(f"SUPERFIELD_ORDER_{k}", residuals, len(residuals))


def check_superfield(model: Model, max_order: int = GRASSMANN_COUNT) -> List[ResidualReport]:
    """Closed forms for orders 0..4 and vanishing of every monomial beyond the eighth"""
    expansion = superfield_expand(model, max_order)
    reports = [compare_order(model, expansion, k) for k in range(min(max_order, 4) + 1)]
    if max_order == GRASSMANN_COUNT:
        beyond = adjoint(model, expansion.order(GRASSMANN_COUNT))
        reports.append(expression_report("SUPERFIELD_TERMINATES", beyond, len(expansion.order(GRASSMANN_COUNT))))
    orders = {k: len(expansion.order(k)) for k in range(max_order + 1)}
    logger.info(f"Checked superfield | Orders: {orders} | Passed: {all(r.passed for r in reports)}",
                check=model.name)
    return reports
