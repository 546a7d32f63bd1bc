from typing import Dict, Tuple

from models.gaussian_rational import ZERO, GaussianRational
from models.residual_report import ResidualReport
from models.susy.expression import Expression


def worst_coefficient(expr: Expression) -> GaussianRational:
    worst = ZERO
    for value in expr.terms.values():
        if value.abs2() > worst.abs2():
            worst = value
    return worst


def expression_report(id: str, residuals: Dict[Tuple, Expression], tuple_count: int, **kwargs) -> ResidualReport:
    """ResidualReport over index tuples whose residual is an Expression; nonzero entries fail"""
    failing = {index: worst_coefficient(expr) for index, expr in residuals.items() if expr}
    report = ResidualReport.from_residual(id, failing, tuple_count, **kwargs)
    if failing:
        first = min(failing)
        report.notes['first_residual'] = str(residuals[first])
    return report
