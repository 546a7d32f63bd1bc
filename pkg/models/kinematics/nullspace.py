from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from models.kinematics.ansatz import LinearConstraintSystem, PolyAnsatz, kinematics_logger

Vector = List[Fraction]


def to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def sparse_matrix(rows: Sequence[Dict[int, Fraction]], columns: int) -> DomainMatrix:
    data = {r: {c: to_qq(v) for c, v in row.items() if v} for r, row in enumerate(rows)}
    return DomainMatrix({r: row for r, row in data.items() if row}, (len(rows), columns), QQ)


def dense_matrix(vectors: Sequence[Sequence[Fraction]], columns: int) -> DomainMatrix:
    return DomainMatrix([[to_qq(v) for v in vector] for vector in vectors], (len(vectors), columns), QQ)


def rank(vectors: Sequence[Sequence[Fraction]], columns: int) -> int:
    if not vectors:
        return 0
    return dense_matrix(vectors, columns).rank()


@dataclass
class SolutionBasis:
    ansatz: PolyAnsatz
    vectors: List[Vector]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def without(self, position: int) -> "SolutionBasis":
        return SolutionBasis(self.ansatz, [v for n, v in enumerate(self.vectors) if n != position])

    def max_degree(self) -> int:
        """Highest monomial degree carrying a nonzero coefficient in any basis vector"""
        degree = 0
        for vector in self.vectors:
            for unknown, value in enumerate(vector):
                if value:
                    degree = max(degree, sum(self.ansatz.split(unknown)[1]))
        return degree


def nullspace_basis(system: LinearConstraintSystem) -> SolutionBasis:
    """Exact basis of the solutions; dimension = unknowns - rank"""
    n_rows, n_cols = system.shape
    if not n_rows:
        vectors = [[Fraction(int(i == j)) for j in range(n_cols)] for i in range(n_cols)]
        return SolutionBasis(system.ansatz, vectors)
    matrix = sparse_matrix(system.rows, n_cols)
    null = matrix.nullspace()
    vectors = [[to_fraction(v) for v in row] for row in null.to_list()] if null.shape[0] else []
    kinematics_logger.debug(f"Computed nullspace | Model: {system.ansatz.model_id} | "
                            f"Degree: {system.ansatz.degree} | Dimension: {len(vectors)}")
    return SolutionBasis(system.ansatz, vectors)


def coordinates(basis: Sequence[Vector], targets: Sequence[Vector], columns: int) -> Tuple[bool, List[Vector]]:
    """
    Coefficients c with target_s = sum_r c[s][r] basis_r, from the reduced row echelon
    form of [basis^T | targets^T]; (False, []) when a target leaves the span.
    """
    k, t = len(basis), len(targets)
    augmented = [[basis[r][j] for r in range(k)] + [targets[s][j] for s in range(t)] for j in range(columns)]
    reduced, pivots = dense_matrix(augmented, k + t).rref()
    if any(p >= k for p in pivots) or list(pivots[:k]) != list(range(k)):
        return False, []
    rows = reduced.to_list()
    return True, [[to_fraction(rows[r][k + s]) for r in range(k)] for s in range(t)]
