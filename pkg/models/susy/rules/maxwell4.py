"""
Four-dimensional N=1 Maxwell multiplet: gauge field A_mu and the Weyl pair
psi^alpha, psibar^alphadot. Z_mu generates the field-dependent gauge
transformation A_nu -> A_nu + i d_nu A_mu and annihilates F, psi, psibar.
"""

from itertools import product
from typing import List

from models.gaussian_rational import I
from models.sigma4 import SigmaRep4
from models.susy.expression import BOSON, FERMION, Expression, FieldGenerator, combine
from models.susy.model import Model
from models.susy.rules.tensor6 import zero_rule
from models.tensor import IndexKind, IndexSlot, Variance

ST4 = IndexSlot(IndexKind.SPACETIME4, 4, Variance.LOWER)
UNDOTTED_UP = IndexSlot(IndexKind.SPINOR4_UNDOTTED, 2, Variance.UPPER)
DOTTED_UP = IndexSlot(IndexKind.SPINOR4_DOTTED, 2, Variance.UPPER)
UNDOTTED_LOW = IndexSlot(IndexKind.SPINOR4_UNDOTTED, 2, Variance.LOWER)
DOTTED_LOW = IndexSlot(IndexKind.SPINOR4_DOTTED, 2, Variance.LOWER)


def field_strength(model: Model, comp) -> Expression:
    mu, nu = comp
    return model.jet("A", (nu,), (mu,)) - model.jet("A", (mu,), (nu,))


def q_on_a(model: Model, index, comp) -> Expression:
    """[Q_alpha, A_mu] = (sigma_mu psibar)_alpha"""
    alpha, = index
    mu, = comp
    s = model.rep.sigma_down
    return combine(((s[mu, alpha, ad], model.jet("psibar", (ad,))) for ad in range(2)), FERMION)


def qbar_on_a(model: Model, index, comp) -> Expression:
    """[Qbar_alphadot, A_mu] = -(psi sigma_mu)_alphadot"""
    ad, = index
    mu, = comp
    s = model.rep.sigma_down
    return combine(((-s[mu, alpha, ad], model.jet("psi", (alpha,))) for alpha in range(2)), FERMION)


def q_on_psi(model: Model, index, comp) -> Expression:
    """{Q_alpha, psi^beta} = (i/2)(sigma^[mu sigma-tilde^nu])_alpha^beta F_mu nu"""
    alpha, = index
    beta, = comp
    s2 = model.rep.s2
    return combine(((s2[mu, nu, alpha, beta], field_strength(model, (mu, nu)))
                    for mu, nu in product(range(4), repeat=2) if s2[mu, nu, alpha, beta]), BOSON).scale(I / 2)


def qbar_on_psibar(model: Model, index, comp) -> Expression:
    """{Qbar_alphadot, psibar^betadot} = (i/2)(sigma-tilde^[mu sigma^nu])^betadot_alphadot F_mu nu"""
    ad, = index
    bd, = comp
    st2 = model.rep.st2
    return combine(((st2[mu, nu, bd, ad], field_strength(model, (mu, nu)))
                    for mu, nu in product(range(4), repeat=2) if st2[mu, nu, bd, ad]), BOSON).scale(I / 2)


def z_on_a(model: Model, index, comp) -> Expression:
    """[Z_mu, A_nu] = i d_nu A_mu"""
    mu, = index
    nu, = comp
    return model.jet("A", (mu,), (nu,), coeff=I)


def weyl_psibar(model: Model) -> List[Expression]:
    """(sigma^mu d_mu psibar)_alpha"""
    s = model.rep.sigma
    return [combine(((s[mu, alpha, ad], model.jet("psibar", (ad,), (mu,)))
                     for mu in range(4) for ad in range(2) if s[mu, alpha, ad]), FERMION)
            for alpha in range(2)]


def weyl_psi(model: Model) -> List[Expression]:
    """(d_mu psi sigma^mu)_alphadot"""
    s = model.rep.sigma
    return [combine(((s[mu, alpha, ad], model.jet("psi", (alpha,), (mu,)))
                     for mu in range(4) for alpha in range(2) if s[mu, alpha, ad]), FERMION)
            for ad in range(2)]


def build_maxwell4(rep: SigmaRep4, jet_order: int) -> Model:
    a = FieldGenerator("A", (ST4,), BOSON, label="gauge field")
    psi = FieldGenerator("psi", (UNDOTTED_UP,), FERMION, label="gaugino")
    psibar = FieldGenerator("psibar", (DOTTED_UP,), FERMION, label="conjugate gaugino")
    return Model(
        name="4d-maxwell-onshell",
        rep=rep,
        N=1,
        dimension=4,
        generators={g.id: g for g in (a, psi, psibar)},
        rules={
            ("Q", "A"): q_on_a,
            ("Qbar", "A"): qbar_on_a,
            ("Q", "psi"): q_on_psi,
            ("Q", "psibar"): zero_rule(BOSON),
            ("Qbar", "psi"): zero_rule(BOSON),
            ("Qbar", "psibar"): qbar_on_psibar,
            ("Z", "A"): z_on_a,
            ("Z", "psi"): zero_rule(FERMION),
            ("Z", "psibar"): zero_rule(FERMION),
        },
        charge_ranges={"Q": (2,), "Qbar": (2,), "P": (4,), "Z": (4,)},
        expected_closure="P+Z",
        relations={'WEYL_PSIBAR': weyl_psibar, 'WEYL_PSI': weyl_psi},
        composites={"F": field_strength},
        jet_order=jet_order,
    )
