"""
Quotient of the jet space by equations of motion.

Every relation instance lives in a single sector (generator, derivative
order). Per sector the instances are kept in fully reduced row echelon form
with the highest jet of each row as its pivot, so reduction rewrites higher
jets in terms of lower ones and terminates after one pass.
"""

import logging
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Tuple

from models.errors import RuleError
from models.gaussian_rational import ZERO, GaussianRational
from models.susy.expression import Expression, JetKey

quotient_logger = logging.getLogger("SusyVerifier.quotient")

Sector = Tuple[str, int]
Row = Dict[JetKey, GaussianRational]


class SectorBasis:
    def __init__(self):
        self.pivots: Dict[JetKey, Row] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Row) -> Row:
        result = dict(row)
        for pivot in [k for k in result if k in self.pivots]:
            factor = result.get(pivot, ZERO)
            if not factor:
                continue
            for key, value in self.pivots[pivot].items():
                new = result.get(key, ZERO) - factor * value
                if new:
                    result[key] = new
                else:
                    result.pop(key, None)
        return result

    def add(self, row: Row) -> bool:
        """Insert a relation; False when it was already in the span"""
        reduced = self.reduce(row)
        if not reduced:
            return False
        pivot = max(reduced)
        scale = reduced[pivot]
        normalized = {k: v / scale for k, v in reduced.items()}
        for other in self.pivots.values():
            factor = other.get(pivot, ZERO)
            if not factor:
                continue
            for key, value in normalized.items():
                new = other.get(key, ZERO) - factor * value
                if new:
                    other[key] = new
                else:
                    other.pop(key, None)
        self.pivots[pivot] = normalized
        return True


class QuotientReducer:
    """Reduces expressions modulo all derivatives of the base relations up to the jet order"""

    def __init__(self, relations: Iterable[Expression], dimension: int, jet_order: int):
        self.dimension = dimension
        self.jet_order = jet_order
        self._base: Dict[str, List[Tuple[int, Expression]]] = {}
        self._bases: Dict[Sector, SectorBasis] = {}
        for relation in relations:
            sectors = relation.sectors()
            if not sectors:
                continue
            if len(sectors) != 1:
                raise RuleError(f"Quotient relation spans several sectors: {sorted(sectors)}")
            (gen, order), = sectors
            self._base.setdefault(gen, []).append((order, relation))

    @property
    def is_empty(self) -> bool:
        return not self._base

    def basis(self, sector: Sector) -> SectorBasis:
        basis = self._bases.get(sector)
        if basis is not None:
            return basis
        gen, order = sector
        basis = SectorBasis()
        for base_order, relation in self._base.get(gen, []):
            extra = order - base_order
            if extra < 0:
                continue
            for deriv in combinations_with_replacement(range(self.dimension), extra):
                basis.add(relation.differentiate(deriv, self.jet_order).terms)
        quotient_logger.debug(f"Built quotient sector | Generator: {gen} | Order: {order} | Rank: {len(basis)}")
        self._bases[sector] = basis
        return basis

    def reduce(self, expr: Expression) -> Expression:
        if self.is_empty or not expr:
            return expr
        terms: Row = {}
        for sector, row in expr.sectors().items():
            if sector[0] in self._base:
                row = self.basis(sector).reduce(row)
            terms.update(row)
        return Expression(terms, expr.parity)

    def contains(self, expr: Expression) -> bool:
        return self.reduce(expr).is_zero()


def span_reducer(expressions: Iterable[Expression]) -> SectorBasis:
    """Plain span of the given expressions, without derivative closure"""
    basis = SectorBasis()
    for expr in expressions:
        basis.add(expr.terms)
    return basis
