"""
Six-dimensional tensor multiplet rules.

Both the off-shell multiplet (phi, psi, self-dual H) and the on-shell
multiplet (phi, psi, two-form B with H its strength-one field strength) share
[Q, phi] and {Q, psi}; they differ in how H is realized and in the gauge
charge Z, which only exists on shell.
"""

from fractions import Fraction
from itertools import combinations, product
from typing import Callable, List

from models.clifford6 import GammaRep6
from models.gaussian_rational import I
from models.susy.expression import BOSON, FERMION, Expression, FieldGenerator, combine
from models.susy.model import Model
from models.tensor import IndexKind, IndexSlot, Variance, contract, metric_signs

ST6 = IndexSlot(IndexKind.SPACETIME6, 6, Variance.LOWER)
SPINOR_LOW = IndexSlot(IndexKind.SPINOR6, 4, Variance.LOWER)

SIGNS6 = metric_signs(IndexKind.SPACETIME6)
TRIPLES = tuple(combinations(range(6), 3))


def symplectic_slot(N: int) -> IndexSlot:
    return IndexSlot(IndexKind.SYMPLECTIC, 2 * N, Variance.UPPER)


def scalar_generator() -> FieldGenerator:
    return FieldGenerator("phi", (), BOSON, label="scalar")


def spinor_generator(N: int) -> FieldGenerator:
    return FieldGenerator("psi", (symplectic_slot(N), SPINOR_LOW), FERMION, label="symplectic Weyl spinor")


def eta(A: int, B: int) -> int:
    return SIGNS6[A] if A == B else 0


# shared rules

def q_on_phi(model: Model, index, comp) -> Expression:
    i, alpha = index
    return model.jet("psi", (i, alpha), coeff=-I)


def q_on_psi_with(field_strength: Callable[[Model, tuple], Expression], h_weight: Fraction):
    """
    {Q^i_alpha, psi^j_beta} = E^{ij}(gamma^A d_A phi + w gamma^{[ABC]} X_ABC)
    with X the three-form supplied by ``field_strength``.
    """
    def rule(model: Model, index, comp) -> Expression:
        i, alpha = index
        j, beta = comp
        e = model.rep.symplectic[i, j]
        if not e:
            return Expression.zero(BOSON)
        g, g3 = model.rep.gamma, model.rep.g3
        terms = [(g[A, alpha, beta], model.jet("phi", (), (A,))) for A in range(6)]
        for triple in TRIPLES:
            c = g3[triple + (alpha, beta)]
            if c:
                terms.append((c * 6 * h_weight, field_strength(model, triple)))
        return combine(terms, BOSON).scale(e)
    return rule


def zero_rule(parity: int):
    def rule(model: Model, index, comp) -> Expression:
        return Expression.zero(parity)
    return rule


# off-shell multiplet

def offshell_h(model: Model, comp) -> Expression:
    return model.jet("H", comp)


def _gamma_gt3(rep: GammaRep6):
    # [D, alpha, A, B, C, beta] = (gamma^D gamma-tilde_{[A} gamma_B gamma-tilde_{C]})_alpha^beta
    return contract(rep.gamma, rep.gt3_down, [(2, 3)])


def q_on_h(model: Model, index, comp) -> Expression:
    """[Q^k_alpha, H_ABC] = -(i/6)(gamma^D gamma-tilde_{[A} gamma_B gamma-tilde_{C]} d_D psi^k)_alpha"""
    k, alpha = index
    table = model.table("gamma_gt3", lambda: _gamma_gt3(model.rep))
    terms = []
    for D, beta in product(range(6), range(4)):
        c = table[(D, alpha) + comp + (beta,)]
        if c:
            terms.append((c, model.jet("psi", (k, beta), (D,))))
    return combine(terms, FERMION).scale(-I / 6)


def offshell_relations(model: Model):
    """
    Constraints forced on the off-shell multiplet: Maxwell-type equation and
    Bianchi identity for H, the chiral Dirac equation for psi and the wave
    equation for phi.
    """
    def emh(m: Model) -> List[Expression]:
        rows = []
        for A, B in combinations(range(6), 2):
            rows.append(combine(((SIGNS6[C], m.jet("H", (A, B, C), (C,))) for C in range(6) if C not in (A, B)),
                                BOSON))
        return rows

    def poincare(m: Model) -> List[Expression]:
        rows = []
        for A, B, C, D in combinations(range(6), 4):
            rows.append(m.jet("H", (B, C, D), (A,)) - m.jet("H", (A, C, D), (B,))
                        + m.jet("H", (A, B, D), (C,)) - m.jet("H", (A, B, C), (D,)))
        return rows

    return {'EMH': emh, 'POINCARE': poincare, 'CPSI': weyl_psi, 'BOXPHI': box_phi}


def weyl_psi(model: Model) -> List[Expression]:
    """gamma-tilde^{A alpha beta} d_A psi^i_beta"""
    rows = []
    gt = model.rep.gamma_tilde
    for i, alpha in product(range(2 * model.N), range(4)):
        rows.append(combine(((gt[A, alpha, beta], model.jet("psi", (i, beta), (A,)))
                             for A in range(6) for beta in range(4) if gt[A, alpha, beta]), FERMION))
    return rows


def box_phi(model: Model) -> List[Expression]:
    return [combine(((SIGNS6[A], model.jet("phi", (), (A, A))) for A in range(6)), BOSON)]


def build_offshell(rep: GammaRep6, jet_order: int) -> Model:
    phi, psi = scalar_generator(), spinor_generator(rep.N)
    h = FieldGenerator("H", (ST6, ST6, ST6), BOSON, symmetry="selfdual3", label="self-dual three-form")
    model = Model(
        name="6d-tensor-offshell",
        rep=rep,
        N=rep.N,
        dimension=6,
        generators={g.id: g for g in (phi, psi, h)},
        rules={
            ("Q", "phi"): q_on_phi,
            ("Q", "psi"): q_on_psi_with(offshell_h, Fraction(1, 4)),
            ("Q", "H"): q_on_h,
        },
        charge_ranges={"Q": (2 * rep.N, 4), "P": (6,)},
        expected_closure="P",
        jet_order=jet_order,
        composites={"H": offshell_h},
    )
    model.relations.update(offshell_relations(model))
    return model


# on-shell multiplet

def onshell_h(model: Model, comp) -> Expression:
    """H_ABC = d_[A B_BC] with strength one"""
    A, B, C = comp
    return combine(((Fraction(1, 3), model.jet("B", (B, C), (A,))),
                    (Fraction(1, 3), model.jet("B", (C, A), (B,))),
                    (Fraction(1, 3), model.jet("B", (A, B), (C,)))), BOSON)


def onshell_h_minus(model: Model, comp) -> Expression:
    """Anti-self-dual part H_- = (H - *H)/2 of the composite field strength"""
    dual = model.rep.eps_down3_up3
    A, B, C = comp
    terms = [(Fraction(1, 2), onshell_h(model, comp))]
    for triple in TRIPLES:
        c = dual[(A, B, C) + triple]
        if c:
            # (1/6) sum over all orderings of DEF equals the sorted term once
            terms.append((-c / 2, onshell_h(model, triple)))
    return combine(terms, BOSON)


def q_on_b(model: Model, index, comp) -> Expression:
    """[Q^i_alpha, B_AB] = -i (gamma_[A gamma-tilde_B] psi^i)_alpha"""
    i, alpha = index
    A, B = comp
    g2 = model.rep.g2_down
    return combine(((g2[A, B, alpha, beta], model.jet("psi", (i, beta))) for beta in range(4)
                    if g2[A, B, alpha, beta]), FERMION).scale(-I)


def gauge_parameter(model: Model, C: int, comp) -> Expression:
    """Z_C acts on B as d_A L_B - d_B L_A with L_B = -i(B_BC - eta_BC phi)"""
    A, B = comp
    return combine((
        (1, model.jet("B", (B, C), (A,))),
        (-1, model.jet("B", (A, C), (B,))),
        (eta(C, A), model.jet("phi", (), (B,))),
        (-eta(C, B), model.jet("phi", (), (A,))),
    ), BOSON).scale(-I)


def z_on_b(model: Model, index, comp) -> Expression:
    """[Z_C, B_AB] = -i(d_A B_BC - d_B B_AC + eta_CA d_B phi - eta_CB d_A phi)"""
    return gauge_parameter(model, index[0], comp)


def onshell_relations(model: Model):
    def selfdual(m: Model) -> List[Expression]:
        return [onshell_h_minus(m, triple) for triple in TRIPLES if triple[0] == 0]

    return {'SELFDUAL': selfdual, 'EMPSI': weyl_psi}


def build_onshell(rep: GammaRep6, jet_order: int) -> Model:
    phi, psi = scalar_generator(), spinor_generator(rep.N)
    b = FieldGenerator("B", (ST6, ST6), BOSON, symmetry="antisym", label="two-form")
    model = Model(
        name="6d-tensor-onshell",
        rep=rep,
        N=rep.N,
        dimension=6,
        generators={g.id: g for g in (phi, psi, b)},
        rules={
            ("Q", "phi"): q_on_phi,
            ("Q", "psi"): q_on_psi_with(onshell_h, Fraction(1, 4)),
            ("Q", "B"): q_on_b,
            ("Z", "phi"): zero_rule(BOSON),
            ("Z", "psi"): zero_rule(FERMION),
            ("Z", "B"): z_on_b,
        },
        charge_ranges={"Q": (2 * rep.N, 4), "P": (6,), "Z": (6,)},
        expected_closure="P+Z",
        jet_order=jet_order,
        composites={"H": onshell_h, "H_minus": onshell_h_minus},
    )
    model.relations.update(onshell_relations(model))
    return model
