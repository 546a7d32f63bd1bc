"""Catalog of four-dimensional sigma-matrix identities"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from models.errors import CatalogError
from models.gaussian_rational import I
from models.residual_report import ResidualReport
from models.sigma4 import SigmaRep4
from models.tensor import Tensor, contract, lower_index, trace
from utils.logger import logger

Part = Tuple[Tensor, Tensor]


def _d(a: int, b: int) -> int:
    return 1 if a == b else 0


@dataclass(frozen=True)
class IdentityEntry4:
    id: str
    anchor: str
    free_indices: str
    evaluate: Callable[[SigmaRep4], List[Part]]


def _sti(rep: SigmaRep4) -> List[Part]:
    lhs = rep.s_st + rep.s_st.transpose([1, 0, 2, 3])
    rhs = Tensor.from_function(lhs.spec, lambda m, n, a, b: 2 * rep.eta4[m, n] * _d(a, b))
    return [(lhs, rhs)]


def _ftr2(rep: SigmaRep4) -> List[Part]:
    return [(trace(rep.s_st, 2, 3).scale(Fraction(1, 2)), rep.eta4)]


def _ftr4(rep: SigmaRep4) -> List[Part]:
    lhs = trace(contract(rep.s_st, rep.s_st, [(3, 2)]), 2, 5).scale(Fraction(1, 2))
    eta, eps = rep.eta4, rep.eps4_up
    rhs = Tensor.from_function(lhs.spec, lambda m, n, l, r: (
        eta[m, n] * eta[l, r] + eta[n, l] * eta[r, m] - eta[m, l] * eta[n, r] - I * eps[m, n, l, r]))
    return [(lhs, rhs)]


def _fcontract(rep: SigmaRep4) -> List[Part]:
    lhs = contract(rep.sigma, rep.sigma_tilde_down, [(0, 0)])
    rhs = Tensor.from_function(lhs.spec, lambda a, ad, bd, b: 2 * _d(a, b) * _d(ad, bd))
    return [(lhs, rhs)]


def _fese(rep: SigmaRep4) -> List[Part]:
    left = contract(rep.eps2, rep.sigma_tilde, [(1, 2)])
    lhs = contract(left, rep.eps2_bar, [(2, 0)]).transpose([1, 0, 2])
    return [(lhs, -rep.sigma)]


def _fsig4_a(rep: SigmaRep4) -> List[Part]:
    lhs = contract(rep.sigma, rep.sigma_down, [(0, 0)])
    eps, eps_bar = rep.eps2, rep.eps2_bar
    rhs = Tensor.from_function(lhs.spec, lambda a, ad, b, bd: 2 * eps[a, b] * eps_bar[ad, bd])
    return [(lhs, rhs)]


def _fsig4_b(rep: SigmaRep4) -> List[Part]:
    s2_down = lower_index(lower_index(rep.s2, 0), 1)
    lhs = contract(rep.s2, s2_down, [(0, 0), (1, 1)])
    rhs = Tensor.from_function(lhs.spec, lambda a, b, c, d: 4 * (_d(a, b) * _d(c, d) - 2 * _d(a, d) * _d(c, b)))
    return [(lhs, rhs)]


def _fsig4_c(rep: SigmaRep4) -> List[Part]:
    st2_down = lower_index(lower_index(rep.st2, 0), 1)
    lhs = contract(rep.s2, st2_down, [(0, 0), (1, 1)])
    return [(lhs, Tensor.zeros(lhs.spec))]


def _fdde(rep: SigmaRep4) -> List[Part]:
    spec = rep.s_st.spec.select([2, 3, 2, 3])
    lhs = Tensor.from_function(spec, lambda a, b, c, d: _d(a, d) * _d(c, b) - _d(a, b) * _d(c, d))
    eps, eps_inv = rep.eps2, rep.eps2_inv
    rhs = Tensor.from_function(spec, lambda a, b, c, d: eps[a, c] * eps_inv[b, d])
    return [(lhs, rhs)]


CATALOG4: Dict[str, IdentityEntry4] = {e.id: e for e in (
    IdentityEntry4("STI", "sigma^mu st^nu + sigma^nu st^mu = 2 eta^munu", "mu nu alpha beta", _sti),
    IdentityEntry4("FTR2", "1/2 tr(sigma^mu st^nu) = eta^munu", "mu nu", _ftr2),
    IdentityEntry4("FTR4", "1/2 tr(sigma st sigma st) = eta eta + eta eta - eta eta - i eps^munulambdarho",
                   "mu nu lambda rho", _ftr4),
    IdentityEntry4("FCONTRACT", "sigma^mu_aad st_mu^bdb = 2 delta delta", "alpha alphadot betadot beta", _fcontract),
    IdentityEntry4("FESE", "eps st^mu t epsbar = -sigma^mu", "mu alpha alphadot", _fese),
    IdentityEntry4("FSIG4_A", "sigma^mu_aad sigma_mu bbd = 2 eps_ab epsbar_adbd",
                   "alpha alphadot beta betadot", _fsig4_a),
    IdentityEntry4("FSIG4_B", "(sigma^[mu st^nu])(sigma_[mu st_nu]) = 4(delta delta - 2 delta delta)",
                   "alpha beta gamma delta", _fsig4_b),
    IdentityEntry4("FSIG4_C", "(sigma^[mu st^nu])_a^b (st_[mu sigma_nu])^ad_bd = 0",
                   "alpha beta alphadot betadot", _fsig4_c),
    IdentityEntry4("FDDE", "delta delta - delta delta = eps_ag epsinv^bd", "alpha beta gamma delta", _fdde),
)}

IDENTITY_IDS4 = tuple(sorted(CATALOG4))


def verify_identity4(rep: SigmaRep4, id: str) -> ResidualReport:
    """Evaluate one four-dimensional identity exhaustively"""
    entry = CATALOG4.get(id)
    if entry is None:
        raise CatalogError(f"Unknown four-dimensional identity: {id}")
    report = ResidualReport.from_parts(id, entry.evaluate(rep))
    logger.debug(f"Verified identity | Passed: {report.passed} | Tuples: {report.tuple_count}", check=id)
    return report
