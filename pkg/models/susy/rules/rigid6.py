"""
Rigid representation of the six-dimensional algebra on the zero modes of the
two-form: B_AB = B1_A x_B - B1_B x_A + B3_ABC x^C + B2_AB. The coefficient
operators B1, B3 (self-dual) and B2 and the spinor psi carry no derivatives,
so P acts through explicit rules.
"""

from fractions import Fraction

from models.clifford6 import GammaRep6
from models.gaussian_rational import I
from models.susy.expression import BOSON, FERMION, Expression, FieldGenerator, combine
from models.susy.model import Model
from models.susy.rules.tensor6 import ST6, TRIPLES, eta, q_on_b, spinor_generator, zero_rule


def q_on_psi(model: Model, index, comp) -> Expression:
    """{Q^i_alpha, psi^j_beta} = E^{ij}(-B1_A gamma^A + 1/12 B3_ABC gamma^{[ABC]})_{alpha beta}"""
    i, alpha = index
    j, beta = comp
    e = model.rep.symplectic[i, j]
    if not e:
        return Expression.zero(BOSON)
    g, g3 = model.rep.gamma, model.rep.g3
    terms = [(-g[A, alpha, beta], model.jet("B1", (A,))) for A in range(6)]
    for triple in TRIPLES:
        c = g3[triple + (alpha, beta)]
        if c:
            terms.append((c * Fraction(6, 12), model.jet("B3", triple)))
    return combine(terms, BOSON).scale(e)


def p_on_b2(model: Model, index, comp) -> Expression:
    """[P_C, B2_AB] = -i(B1_A eta_BC - B1_B eta_CA + B3_ABC)"""
    C, = index
    A, B = comp
    return combine((
        (eta(B, C), model.jet("B1", (A,))),
        (-eta(C, A), model.jet("B1", (B,))),
        (1, model.jet("B3", (A, B, C))),
    ), BOSON).scale(-I)


def build_rigid6(rep: GammaRep6, jet_order: int) -> Model:
    b1 = FieldGenerator("B1", (ST6,), BOSON, label="linear zero mode")
    b3 = FieldGenerator("B3", (ST6, ST6, ST6), BOSON, symmetry="selfdual3", label="self-dual zero mode")
    b2 = FieldGenerator("B2", (ST6, ST6), BOSON, symmetry="antisym", label="constant zero mode")
    psi = spinor_generator(rep.N)
    return Model(
        name="6d-toy-rigid",
        rep=rep,
        N=rep.N,
        dimension=6,
        generators={g.id: g for g in (b1, b3, b2, psi)},
        rules={
            ("Q", "B1"): zero_rule(FERMION),
            ("Q", "B3"): zero_rule(FERMION),
            ("Q", "B2"): q_on_b,
            ("Q", "psi"): q_on_psi,
            ("P", "B1"): zero_rule(BOSON),
            ("P", "B3"): zero_rule(BOSON),
            ("P", "B2"): p_on_b2,
            ("P", "psi"): zero_rule(FERMION),
        },
        charge_ranges={"Q": (2 * rep.N, 4), "P": (6,)},
        expected_closure="P",
        derivative_momentum=False,
        jet_order=jet_order,
    )
