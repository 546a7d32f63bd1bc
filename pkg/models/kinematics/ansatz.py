"""
Polynomial ansatz for the linear field equations of the two toy models.

A field component F_c(x) = sum_m u_{c,m} x^m over monomials of total degree
at most ``degree`` in the upper coordinates x^A. A linear equation built from
first derivatives becomes one row per (equation component, output monomial)
after matching coefficients.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Dict, List, Sequence, Tuple

from models.clifford6 import build_gamma6
from models.errors import CatalogError, ConfigError
from models.tensor import IndexKind, metric_signs, permutation_sign

kinematics_logger = logging.getLogger("SusyVerifier.kinematics")

Exponent = Tuple[int, ...]
# sum of coeff * d_A F_c keyed by (component position, A)
DerivativeForm = Dict[Tuple[int, int], Fraction]

MAX_DEGREE = 3
SIGNS6 = metric_signs(IndexKind.SPACETIME6)
SIGNS4 = metric_signs(IndexKind.SPACETIME4)


def monomials(n_vars: int, degree: int) -> Tuple[Exponent, ...]:
    """Exponent tuples of total degree <= degree, by degree then lexicographically"""
    result = []
    for d in range(degree + 1):
        level = [e for e in product(range(d + 1), repeat=n_vars) if sum(e) == d]
        result.extend(sorted(level, reverse=True))
    return tuple(result)


def monomial_label(exponent: Exponent) -> str:
    parts = [f"x{a}" + (f"^{e}" if e > 1 else "") for a, e in enumerate(exponent) if e]
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class PolyAnsatz:
    model_id: str
    components: Tuple[Tuple[int, ...], ...]
    n_vars: int
    degree: int
    monomials: Tuple[Exponent, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'monomials', monomials(self.n_vars, self.degree))

    @property
    def unknown_count(self) -> int:
        return len(self.components) * len(self.monomials)

    def unknown(self, comp_pos: int, mono_pos: int) -> int:
        return comp_pos * len(self.monomials) + mono_pos

    def split(self, unknown: int) -> Tuple[int, Exponent]:
        comp_pos, mono_pos = divmod(unknown, len(self.monomials))
        return comp_pos, self.monomials[mono_pos]

    def derivative(self, comp_pos: int, A: int) -> Dict[Exponent, Dict[int, int]]:
        """d_A F_c as output monomial -> {unknown: integer coefficient}"""
        result: Dict[Exponent, Dict[int, int]] = {}
        for mono_pos, m in enumerate(self.monomials):
            if m[A]:
                out = m[:A] + (m[A] - 1,) + m[A + 1:]
                result.setdefault(out, {})[self.unknown(comp_pos, mono_pos)] = m[A]
        return result

    def derivative_table(self, vector: Sequence[Fraction], point: Sequence[Fraction]) -> Dict[Tuple[int, int], Fraction]:
        """d_A F_c at one point for every (component position, A), using only nonzero coefficients"""
        table: Dict[Tuple[int, int], Fraction] = {}
        for unknown, u in enumerate(vector):
            if not u:
                continue
            comp_pos, m = self.split(unknown)
            for A in range(self.n_vars):
                if not m[A]:
                    continue
                term = u * m[A]
                for a, e in enumerate(m):
                    power = e - 1 if a == A else e
                    if power:
                        term *= point[a] ** power
                key = (comp_pos, A)
                table[key] = table.get(key, Fraction(0)) + term
        return table


@dataclass
class LinearConstraintSystem:
    """Exact rational rows over the ansatz unknowns, with the equation each row came from"""
    ansatz: PolyAnsatz
    rows: List[Dict[int, Fraction]]
    provenance: List[str]
    forms: List[Tuple[str, DerivativeForm]]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), self.ansatz.unknown_count

    def permuted(self, order: Sequence[int]) -> "LinearConstraintSystem":
        """Same system with unknown j moved to column order[j]"""
        rows = [{order[j]: v for j, v in row.items()} for row in self.rows]
        return LinearConstraintSystem(self.ansatz, rows, list(self.provenance), self.forms)


# equations

def _antisym_position(positions: Dict[Tuple[int, int], int], X: int, Y: int) -> Tuple[int, int]:
    sign = permutation_sign((X, Y))
    if not sign:
        return 0, -1
    return sign, positions[tuple(sorted((X, Y)))]


@lru_cache(maxsize=None)
def _eps_down3_up3():
    return build_gamma6(1).eps_down3_up3


def master_forms() -> Tuple[Tuple[Tuple[int, int], ...], List[Tuple[str, DerivativeForm]]]:
    """
    d_A B_BC - (1/5)(eta_AB d_D B^D_C - eta_AC d_D B^D_B) - H+_ABC = 0
    with H = d_[A B_BC] at strength one and H+ = (H + *H)/2
    """
    components = tuple(combinations(range(6), 2))
    positions = {c: n for n, c in enumerate(components)}
    eps = _eps_down3_up3()
    forms = []
    for A, (B, C) in product(range(6), components):
        form: DerivativeForm = defaultdict(Fraction)

        def d(E: int, X: int, Y: int, coeff: Fraction):
            sign, pos = _antisym_position(positions, X, Y)
            if sign:
                form[(pos, E)] += coeff * sign

        def h(X: int, Y: int, Z: int, coeff: Fraction):
            third = coeff / 3
            d(X, Y, Z, third)
            d(Y, Z, X, third)
            d(Z, X, Y, third)

        d(A, B, C, Fraction(1))
        if A == B:
            for D in range(6):
                d(D, D, C, Fraction(-SIGNS6[A] * SIGNS6[D], 5))
        if A == C:
            for D in range(6):
                d(D, D, B, Fraction(SIGNS6[A] * SIGNS6[D], 5))
        h(A, B, C, Fraction(-1, 2))
        for D, E, F in product(range(6), repeat=3):
            c = eps[(A, B, C, D, E, F)]
            if c:
                h(D, E, F, -c.re / 12)
        forms.append((f"master A={A} BC={B}{C}", {k: v for k, v in form.items() if v}))
    return components, forms


def killing_forms() -> Tuple[Tuple[Tuple[int], ...], List[Tuple[str, DerivativeForm]]]:
    """d_mu A_nu + d_nu A_mu - (1/2) eta_mu nu d.A = 0 for mu <= nu"""
    components = tuple((mu,) for mu in range(4))
    forms = []
    for mu, nu in combinations(range(4), 2):
        forms.append((f"killing {mu}{nu}", {(nu, mu): Fraction(1), (mu, nu): Fraction(1)}))
    for mu in range(4):
        form: DerivativeForm = defaultdict(Fraction)
        form[(mu, mu)] += 2
        for rho in range(4):
            form[(rho, rho)] -= Fraction(SIGNS4[mu] * SIGNS4[rho], 2)
        forms.append((f"killing {mu}{mu}", {k: v for k, v in form.items() if v}))
    return components, forms


class KinematicModel:
    def __init__(self, id: str, n_vars: int, forms: Callable, anchor: str, degree_bound: int):
        self.id = id
        self.n_vars = n_vars
        self.forms = forms
        self.anchor = anchor
        # highest monomial degree any solution may carry; the profile is flat from here on
        self.degree_bound = degree_bound


KINEMATIC_MODELS: Dict[str, KinematicModel] = {
    'MASTER6': KinematicModel('MASTER6', 6, master_forms, "first-order equation for the two-form", 1),
    'KILLING4': KinematicModel('KILLING4', 4, killing_forms, "conformal Killing equation", 2),
}


def kinematic_model(model_id: str) -> KinematicModel:
    model = KINEMATIC_MODELS.get(model_id)
    if model is None:
        raise CatalogError(f"Unknown kinematic model: {model_id}")
    return model


def assemble_system(model_id: str, degree: int) -> LinearConstraintSystem:
    """Coefficient-matched rows of the model's equation for fields of degree <= degree"""
    model = kinematic_model(model_id)
    if not 0 <= degree <= MAX_DEGREE:
        raise ConfigError(f"Polynomial degree must lie in 0..{MAX_DEGREE}, got {degree}")
    components, forms = model.forms()
    ansatz = PolyAnsatz(model_id, components, model.n_vars, degree)
    rows, provenance = [], []
    for label, form in forms:
        by_monomial: Dict[Exponent, Dict[int, Fraction]] = {}
        for (comp_pos, A), coeff in form.items():
            for out, entries in ansatz.derivative(comp_pos, A).items():
                row = by_monomial.setdefault(out, {})
                for unknown, value in entries.items():
                    row[unknown] = row.get(unknown, Fraction(0)) + coeff * value
        for out in sorted(by_monomial):
            row = {u: v for u, v in by_monomial[out].items() if v}
            if row:
                rows.append(row)
                provenance.append(f"{label} {monomial_label(out)}")
    kinematics_logger.debug(f"Assembled system | Model: {model_id} | Degree: {degree} | "
                            f"Rows: {len(rows)} | Unknowns: {ansatz.unknown_count}")
    return LinearConstraintSystem(ansatz, rows, provenance, forms)
