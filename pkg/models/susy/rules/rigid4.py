"""
Rigid representation of the four-dimensional algebra on the coefficient
operators of the conformal Killing one-form
A_mu = a_mu + lambda x_mu + w_mu^nu x_nu + 2(x.b) x_mu - x^2 b_mu
and of the linear spinors psi = xi + rhobar x~, psibar = xibar + x~ rho.
"""

from itertools import product

from models.gaussian_rational import I
from models.sigma4 import SigmaRep4
from models.susy.expression import BOSON, FERMION, Expression, FieldGenerator, combine
from models.susy.model import Model
from models.susy.rules.maxwell4 import DOTTED_LOW, DOTTED_UP, ST4, UNDOTTED_LOW, UNDOTTED_UP
from models.susy.rules.tensor6 import zero_rule
from models.tensor import IndexKind, lower_index, metric_signs

SIGNS4 = metric_signs(IndexKind.SPACETIME4)


def eta4(mu: int, nu: int) -> int:
    return SIGNS4[mu] if mu == nu else 0


# supercharges

def q_on_a(model: Model, index, comp) -> Expression:
    """[Q_alpha, a_mu] = (sigma_mu xibar)_alpha"""
    alpha, = index
    mu, = comp
    s = model.rep.sigma_down
    return combine(((s[mu, alpha, ad], model.jet("xibar", (ad,))) for ad in range(2)), FERMION)


def qbar_on_a(model: Model, index, comp) -> Expression:
    """[Qbar_alphadot, a_mu] = -(xi sigma_mu)_alphadot"""
    ad, = index
    mu, = comp
    s = model.rep.sigma_down
    return combine(((-s[mu, alpha, ad], model.jet("xi", (alpha,))) for alpha in range(2)), FERMION)


def q_on_lambda(model: Model, index, comp) -> Expression:
    return model.jet("rho", index)


def qbar_on_lambda(model: Model, index, comp) -> Expression:
    return model.jet("rhobar", index, coeff=-1)


def q_on_w(model: Model, index, comp) -> Expression:
    """[Q_alpha, w_mu nu] = (sigma_[mu sigma-tilde_nu] rho)_alpha"""
    alpha, = index
    mu, nu = comp
    s2 = model.table("s2_down", lambda: _lower_pair(model.rep.s2))
    return combine(((s2[mu, nu, alpha, beta], model.jet("rho", (beta,))) for beta in range(2)), FERMION)


def qbar_on_w(model: Model, index, comp) -> Expression:
    """[Qbar_alphadot, w_mu nu] = (rhobar sigma-tilde_[mu sigma_nu])_alphadot"""
    ad, = index
    mu, nu = comp
    st2 = model.table("st2_down", lambda: _lower_pair(model.rep.st2))
    return combine(((st2[mu, nu, bd, ad], model.jet("rhobar", (bd,))) for bd in range(2)), FERMION)


def q_on_xi(model: Model, index, comp) -> Expression:
    """{Q_alpha, xi^beta} = -(i/2) w_mu nu (sigma^[mu sigma-tilde^nu])_alpha^beta + (phi + i lambda) delta"""
    alpha, = index
    beta, = comp
    s2 = model.rep.s2
    terms = [(s2[mu, nu, alpha, beta] * (-I / 2), model.jet("w", (mu, nu)))
             for mu, nu in product(range(4), repeat=2) if s2[mu, nu, alpha, beta]]
    if alpha == beta:
        terms += [(1, model.jet("varphi")), (I, model.jet("lambda"))]
    return combine(terms, BOSON)


def qbar_on_xibar(model: Model, index, comp) -> Expression:
    """{Qbar_alphadot, xibar^betadot} = -(i/2) w_mu nu (sigma-tilde^[mu sigma^nu])^betadot_alphadot + (phi - i lambda) delta"""
    ad, = index
    bd, = comp
    st2 = model.rep.st2
    terms = [(st2[mu, nu, bd, ad] * (-I / 2), model.jet("w", (mu, nu)))
             for mu, nu in product(range(4), repeat=2) if st2[mu, nu, bd, ad]]
    if ad == bd:
        terms += [(1, model.jet("varphi")), (-I, model.jet("lambda"))]
    return combine(terms, BOSON)


def _b_sigma(model: Model, alpha: int, ad: int, factor) -> Expression:
    s = model.rep.sigma
    return combine(((s[mu, alpha, ad] * factor, model.jet("b", (mu,))) for mu in range(4) if s[mu, alpha, ad]),
                   BOSON)


def q_on_rhobar(model: Model, index, comp) -> Expression:
    """{Q_alpha, rhobar_alphadot} = 2i (b.sigma)_alpha alphadot"""
    return _b_sigma(model, index[0], comp[0], 2 * I)


def qbar_on_rho(model: Model, index, comp) -> Expression:
    """{Qbar_alphadot, rho_alpha} = -2i (b.sigma)_alpha alphadot"""
    return _b_sigma(model, comp[0], index[0], -2 * I)


def q_on_varphi(model: Model, index, comp) -> Expression:
    return model.jet("rho", index, coeff=-3 * I)


def qbar_on_varphi(model: Model, index, comp) -> Expression:
    return model.jet("rhobar", index, coeff=-3 * I)


# translations

def p_on_a(model: Model, index, comp) -> Expression:
    """[P_mu, a_nu] = i(w_mu nu - lambda eta_mu nu)"""
    mu, = index
    nu, = comp
    return combine(((1, model.jet("w", (mu, nu))), (-eta4(mu, nu), model.jet("lambda"))), BOSON).scale(I)


def p_on_lambda(model: Model, index, comp) -> Expression:
    return model.jet("b", index, coeff=-2 * I)


def p_on_w(model: Model, index, comp) -> Expression:
    """[P_lambda, w_mu nu] = 2i(b_mu eta_nu lambda - b_nu eta_mu lambda)"""
    lam, = index
    mu, nu = comp
    return combine(((eta4(nu, lam), model.jet("b", (mu,))), (-eta4(mu, lam), model.jet("b", (nu,)))),
                   BOSON).scale(2 * I)


def p_on_xi(model: Model, index, comp) -> Expression:
    """[P_mu, xi^alpha] = -i (rhobar sigma-tilde_mu)^alpha"""
    mu, = index
    alpha, = comp
    st = model.rep.sigma_tilde_down
    return combine(((st[mu, ad, alpha], model.jet("rhobar", (ad,))) for ad in range(2)), FERMION).scale(-I)


def p_on_xibar(model: Model, index, comp) -> Expression:
    """[P_mu, xibar^alphadot] = -i (sigma-tilde_mu rho)^alphadot"""
    mu, = index
    ad, = comp
    st = model.rep.sigma_tilde_down
    return combine(((st[mu, ad, alpha], model.jet("rho", (alpha,))) for alpha in range(2)), FERMION).scale(-I)


def _lower_pair(t):
    return lower_index(lower_index(t, 0), 1)


def build_rigid4(rep: SigmaRep4, jet_order: int) -> Model:
    generators = (
        FieldGenerator("a", (ST4,), BOSON, label="translation mode"),
        FieldGenerator("lambda", (), BOSON, label="dilatation mode"),
        FieldGenerator("w", (ST4, ST4), BOSON, symmetry="antisym", label="rotation mode"),
        FieldGenerator("b", (ST4,), BOSON, label="special conformal mode"),
        FieldGenerator("xi", (UNDOTTED_UP,), FERMION),
        FieldGenerator("xibar", (DOTTED_UP,), FERMION),
        FieldGenerator("rho", (UNDOTTED_LOW,), FERMION),
        FieldGenerator("rhobar", (DOTTED_LOW,), FERMION),
        FieldGenerator("varphi", (), BOSON, label="scalar mode"),
    )
    boson_zero, fermion_zero = zero_rule(BOSON), zero_rule(FERMION)
    return Model(
        name="4d-toy-rigid",
        rep=rep,
        N=1,
        dimension=4,
        generators={g.id: g for g in generators},
        rules={
            ("Q", "a"): q_on_a,
            ("Qbar", "a"): qbar_on_a,
            ("Q", "lambda"): q_on_lambda,
            ("Qbar", "lambda"): qbar_on_lambda,
            ("Q", "w"): q_on_w,
            ("Qbar", "w"): qbar_on_w,
            ("Q", "b"): fermion_zero,
            ("Qbar", "b"): fermion_zero,
            ("Q", "xi"): q_on_xi,
            ("Qbar", "xi"): boson_zero,
            ("Q", "xibar"): boson_zero,
            ("Qbar", "xibar"): qbar_on_xibar,
            ("Q", "rho"): boson_zero,
            ("Qbar", "rho"): qbar_on_rho,
            ("Q", "rhobar"): q_on_rhobar,
            ("Qbar", "rhobar"): boson_zero,
            ("Q", "varphi"): q_on_varphi,
            ("Qbar", "varphi"): qbar_on_varphi,
            ("P", "a"): p_on_a,
            ("P", "lambda"): p_on_lambda,
            ("P", "w"): p_on_w,
            ("P", "b"): boson_zero,
            ("P", "xi"): p_on_xi,
            ("P", "xibar"): p_on_xibar,
            ("P", "rho"): fermion_zero,
            ("P", "rhobar"): fermion_zero,
            ("P", "varphi"): boson_zero,
        },
        charge_ranges={"Q": (2,), "Qbar": (2,), "P": (4,)},
        expected_closure="P",
        derivative_momentum=False,
        jet_order=jet_order,
    )
