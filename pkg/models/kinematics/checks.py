import random
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from models.gaussian_rational import GaussianRational
from models.kinematics.ansatz import MAX_DEGREE, PolyAnsatz, _eps_down3_up3, assemble_system, kinematic_model
from models.kinematics.nullspace import SolutionBasis, nullspace_basis
from models.kinematics.templates import TEMPLATE_MODELS, MatchReport, match_template
from models.residual_report import ResidualReport
from utils.logger import logger

RESUBSTITUTION_POINTS = 20
MODEL_TEMPLATES = {model: template for template, model in TEMPLATE_MODELS.items()}

DerivativeTable = Dict[Tuple[int, int], Fraction]
Triple = Tuple[int, int, int]


def random_point(rng: random.Random, n_vars: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n_vars))


def _field_strength(ansatz: PolyAnsatz, table: DerivativeTable) -> Dict[Triple, Fraction]:
    """H_ABC = d_[A B_BC] at one point, for every ordered triple"""
    positions = {c: n for n, c in enumerate(ansatz.components)}

    def d(E: int, X: int, Y: int) -> Fraction:
        if X == Y:
            return Fraction(0)
        sign = 1 if X < Y else -1
        return sign * table.get((positions[tuple(sorted((X, Y)))], E), Fraction(0))

    return {(A, B, C): (d(A, B, C) + d(B, C, A) + d(C, A, B)) / 3 for A, B, C in product(range(6), repeat=3)}


def selfdual_field_strength(ansatz: PolyAnsatz, table: DerivativeTable) -> Tuple[Dict[Triple, Fraction],
                                                                                 Dict[Triple, Fraction]]:
    """(H+, H-) of a two-form solution from its first derivatives at one point"""
    h = _field_strength(ansatz, table)
    eps = _eps_down3_up3()
    plus, minus = {}, {}
    for triple in combinations(range(6), 3):
        dual = Fraction(0)
        for other in combinations(range(6), 3):
            # the six orderings of `other` contribute equally
            c = eps[triple + other]
            if c:
                dual += c.re * h[other]
        plus[triple] = (h[triple] + dual) / 2
        minus[triple] = (h[triple] - dual) / 2
    return plus, minus


def resubstitution_check(basis: SolutionBasis, points: int = RESUBSTITUTION_POINTS,
                         seed: int = 20) -> ResidualReport:
    """
    Evaluate every equation component on every basis vector at random rational
    points. Two-form solutions must also have vanishing anti-self-dual field strength.
    """
    ansatz = basis.ansatz
    rng = random.Random(seed)
    _, forms = kinematic_model(ansatz.model_id).forms()
    residual: Dict[tuple, GaussianRational] = {}
    count = 0
    for p in range(points):
        point = random_point(rng, ansatz.n_vars)
        for v, vector in enumerate(basis.vectors):
            table = ansatz.derivative_table(vector, point)
            for f, (_, form) in enumerate(forms):
                count += 1
                value = sum((coeff * table.get(key, Fraction(0)) for key, coeff in form.items()), Fraction(0))
                if value:
                    residual[(p, v, f)] = GaussianRational(value)
            if ansatz.model_id == 'MASTER6':
                _, minus = selfdual_field_strength(ansatz, table)
                for t, value in enumerate(minus.values()):
                    count += 1
                    if value:
                        residual[(p, v, len(forms) + t)] = GaussianRational(value)
    return ResidualReport.from_residual(f"{ansatz.model_id}_RESUBSTITUTION", residual, count)


def degree_profile(model_id: str, degrees: Optional[Sequence[int]] = None,
                   known: Optional[Dict[int, int]] = None) -> Dict[int, int]:
    """Solution dimension for each polynomial degree"""
    degrees = range(MAX_DEGREE + 1) if degrees is None else degrees
    known = known or {}
    return {d: known[d] if d in known else nullspace_basis(assemble_system(model_id, d)).dimension
            for d in degrees}


def degree_profile_report(model_id: str, profile: Dict[int, int]) -> ResidualReport:
    """
    The dimension never drops with the degree and stays at its final value from the
    model's degree bound on.
    """
    bound = kinematic_model(model_id).degree_bound
    degrees = sorted(profile)
    dimensions = [profile[d] for d in degrees]
    monotone = all(a <= b for a, b in zip(dimensions, dimensions[1:]))
    stable = all(profile[d] == profile[bound] for d in degrees if d >= bound)
    notes = {str(d): str(profile[d]) for d in degrees}
    notes['stable_from'] = str(bound)
    return ResidualReport(f"{model_id}_DEGREE_PROFILE", monotone and stable, len(profile), notes=notes)


def degree_bound_report(basis: SolutionBasis) -> ResidualReport:
    """Every basis vector vanishes on monomials above the model's degree bound"""
    model_id = basis.ansatz.model_id
    bound = kinematic_model(model_id).degree_bound
    found = basis.max_degree()
    return ResidualReport(f"{model_id}_DEGREE_BOUND", found <= bound, basis.dimension,
                          notes={'max_degree': str(found), 'bound': str(bound)})


def check_kinematics(model_id: str, degree: int = MAX_DEGREE) -> Tuple[MatchReport, List[ResidualReport]]:
    """Nullspace at the given degree, the closed-form match and the exact re-substitution"""
    system = assemble_system(model_id, degree)
    basis = nullspace_basis(system)
    match = match_template(basis, MODEL_TEMPLATES[model_id])
    reports = [resubstitution_check(basis)]
    profile = degree_profile(model_id, range(degree + 1), {degree: basis.dimension})
    reports.append(degree_profile_report(model_id, profile))
    reports.append(degree_bound_report(basis))
    logger.info(f"Checked kinematics | Model: {model_id} | Degree: {degree} | Dimension: {basis.dimension} | "
                f"Match: {match.match}", check=model_id)
    return match, reports
