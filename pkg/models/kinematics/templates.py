"""
Closed-form solution families and span comparison against a computed basis.

EQ27: B_AB = b_A x_B - b_B x_A + b_ABC x^C + b_AB with b_ABC self-dual.
F12:  A_mu = a_mu + lambda x_mu + w_mu^nu x_nu + 2 (x.b) x_mu - x^2 b_mu.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from models.clifford6 import build_gamma6, project_selfdual3, three_form_basis
from models.errors import CatalogError
from models.kinematics.ansatz import SIGNS4, SIGNS6, Exponent, PolyAnsatz, kinematics_logger
from models.kinematics.nullspace import SolutionBasis, Vector, coordinates, rank

TEMPLATE_MODELS = {'EQ27': 'MASTER6', 'F12': 'KILLING4'}


def _unit(n: int, position: int) -> Exponent:
    return tuple(int(a == position) for a in range(n))


def _pair(n: int, a: int, b: int) -> Exponent:
    e = [0] * n
    e[a] += 1
    e[b] += 1
    return tuple(e)


class _Builder:
    """Accumulates polynomial coefficients of one template field"""

    def __init__(self, ansatz: PolyAnsatz):
        self.ansatz = ansatz
        self.mono_index = {m: n for n, m in enumerate(ansatz.monomials)}
        self.comp_index = {c: n for n, c in enumerate(ansatz.components)}
        self.vector: Vector = [Fraction(0)] * ansatz.unknown_count

    def add(self, comp: Tuple[int, ...], monomial: Exponent, value):
        if not value:
            return
        if len(comp) == 2:
            A, B = comp
            if A == B:
                return
            if A > B:
                comp, value = (B, A), -value
        mono = self.mono_index.get(monomial)
        if mono is None:
            raise CatalogError(f"Template needs monomial {monomial} beyond degree {self.ansatz.degree}")
        self.vector[self.ansatz.unknown(self.comp_index[comp], mono)] += Fraction(value)


def eq27_family(ansatz: PolyAnsatz) -> Tuple[List[str], List[Vector]]:
    labels, vectors = [], []
    zero = (0,) * 6
    for C in range(6):
        b = _Builder(ansatz)
        for B in range(6):
            # b_A x_B - b_B x_A with b = e_C and x_B = eta_BB x^B
            b.add((C, B), _unit(6, B), SIGNS6[B])
        labels.append(f"b_{C}")
        vectors.append(b.vector)
    # self-dual b_ABC: projections of the unit three-forms that contain the index 0
    rep = build_gamma6(1)
    for triple, form in zip(combinations(range(6), 3), three_form_basis()):
        if triple[0] != 0:
            continue
        plus, _ = project_selfdual3(rep, form)
        b = _Builder(ansatz)
        for (A, B, C), value in plus.nonzero.items():
            if A < B:
                b.add((A, B), _unit(6, C), value.re)
        labels.append(f"b_{''.join(map(str, triple))}")
        vectors.append(b.vector)
    for pair in combinations(range(6), 2):
        b = _Builder(ansatz)
        b.add(pair, zero, 1)
        labels.append(f"b_{pair[0]}{pair[1]}")
        vectors.append(b.vector)
    return labels, vectors


def f12_family(ansatz: PolyAnsatz) -> Tuple[List[str], List[Vector]]:
    labels, vectors = [], []
    zero = (0,) * 4
    for mu in range(4):
        b = _Builder(ansatz)
        b.add((mu,), zero, 1)
        labels.append(f"a_{mu}")
        vectors.append(b.vector)
    b = _Builder(ansatz)
    for mu in range(4):
        b.add((mu,), _unit(4, mu), SIGNS4[mu])
    labels.append("lambda")
    vectors.append(b.vector)
    for mu, nu in combinations(range(4), 2):
        # w_mu nu = -w_nu mu = 1, A_mu = w_mu nu x^nu
        b = _Builder(ansatz)
        b.add((mu,), _unit(4, nu), 1)
        b.add((nu,), _unit(4, mu), -1)
        labels.append(f"w_{mu}{nu}")
        vectors.append(b.vector)
    for sigma in range(4):
        # 2 x^sigma x_mu - x^2 delta_mu sigma
        b = _Builder(ansatz)
        for mu in range(4):
            b.add((mu,), _pair(4, sigma, mu), 2 * SIGNS4[mu])
        for rho in range(4):
            b.add((sigma,), _pair(4, rho, rho), -SIGNS4[rho])
        labels.append(f"b_{sigma}")
        vectors.append(b.vector)
    return labels, vectors


TEMPLATES = {'EQ27': eq27_family, 'F12': f12_family}


@dataclass
class MatchReport:
    model: str
    degree: int
    dimension: int
    template: str
    match: bool
    missing_directions: int
    template_labels: List[str] = field(default_factory=list)
    change_of_basis: Optional[List[List[Fraction]]] = None

    def to_dict(self) -> Dict:
        data = {
            'model': self.model,
            'degree': self.degree,
            'dimension': self.dimension,
            'template': self.template,
            'match': self.match,
            'missing_directions': self.missing_directions,
        }
        if self.change_of_basis is not None:
            data['change_of_basis'] = {label: [str(c) for c in row]
                                       for label, row in zip(self.template_labels, self.change_of_basis)}
        return data


def template_vectors(template_id: str, ansatz: PolyAnsatz) -> Tuple[List[str], List[Vector]]:
    builder = TEMPLATES.get(template_id)
    if builder is None:
        raise CatalogError(f"Unknown template: {template_id}")
    if TEMPLATE_MODELS[template_id] != ansatz.model_id:
        raise CatalogError(f"Template {template_id} belongs to {TEMPLATE_MODELS[template_id]}, not {ansatz.model_id}")
    return builder(ansatz)


def match_template(basis: SolutionBasis, template_id: str) -> MatchReport:
    """span(basis) == span(template) by exact rank tests in both directions"""
    ansatz = basis.ansatz
    labels, family = template_vectors(template_id, ansatz)
    columns = ansatz.unknown_count
    rank_basis = rank(basis.vectors, columns)
    rank_family = rank(family, columns)
    rank_union = rank(basis.vectors + family, columns)
    missing = (rank_union - rank_basis) + (rank_union - rank_family)
    report = MatchReport(ansatz.model_id, ansatz.degree, basis.dimension, template_id, missing == 0, missing, labels)
    if report.match and rank_basis == basis.dimension:
        found, change = coordinates(basis.vectors, family, columns)
        if found:
            report.change_of_basis = change
    kinematics_logger.debug(f"Matched template | Template: {template_id} | Match: {report.match} | "
                            f"Missing: {missing} | Family rank: {rank_family}")
    return report
