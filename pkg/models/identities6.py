"""
Catalog of six-dimensional gamma-matrix identities.

Each entry evaluates the left- and right-hand side of one displayed identity
as tensors over every free index and the residual LHS - RHS must vanish
exactly. Entries with several displayed equations return several parts; the
part number is then prepended to the first failing index tuple.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from models.clifford6 import GammaRep6, hodge_dual3, project_selfdual3, selfdual_dimension, three_form_basis
from models.errors import CatalogError
from models.residual_report import ResidualReport
from models.tensor import (
    IndexKind, Tensor, brace_project, contract, kronecker, lower_index, matmul, outer, signed_permutations,
    stack, trace,
)
from utils.logger import logger

Part = Tuple[Tensor, Tensor]


def _d(a: int, b: int) -> int:
    return 1 if a == b else 0


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    anchor: str
    free_indices: str
    evaluate: Callable[[GammaRep6], List[Part]]
    side_checks: Callable[[GammaRep6], Dict[str, bool]] = field(default=lambda rep: {})


def _algebra(rep: GammaRep6) -> List[Part]:
    lhs = rep.g_gt + rep.g_gt.transpose([1, 0, 2, 3])
    rhs = Tensor.from_function(lhs.spec, lambda A, B, a, b: 2 * rep.eta6[A, B] * _d(a, b))
    return [(lhs, rhs)]


def _tr2(rep: GammaRep6) -> List[Part]:
    return [(trace(rep.g_gt, 2, 3), rep.eta6.scale(4))]


def _tr4(rep: GammaRep6) -> List[Part]:
    chain = contract(rep.g_gt, rep.g_gt, [(3, 2)])
    lhs = trace(chain, 2, 5)
    eta = rep.eta6
    rhs = Tensor.from_function(lhs.spec, lambda A, B, C, D: 4 * (
        eta[A, B] * eta[C, D] - eta[A, C] * eta[B, D] + eta[B, C] * eta[D, A]))
    return [(lhs, rhs)]


def _delta3_antisym(spec) -> Tensor:
    """delta^{[A}_D delta^B_E delta^{C]}_F laid out [A, B, C, D, E, F]"""
    k = kronecker(IndexKind.SPACETIME6)
    t = outer(outer(k, k), k).transpose([0, 2, 4, 1, 3, 5])
    return brace_project(t, [0, 1, 2], "antisym").relabel(spec)


def _tr6(rep: GammaRep6) -> List[Part]:
    chain = contract(rep.g3, rep.gt3_down, [(4, 3)])
    lhs = trace(chain, 3, 7)
    rhs = rep.eps_up3_down3.scale(4) - _delta3_antisym(lhs.spec).scale(24)
    return [(lhs, rhs)]


def _herm(rep: GammaRep6) -> List[Part]:
    conjugated = [matmul(rep.g(0), rep.g(A).dagger(), rep.g(0)) for A in range(6)]
    slot = rep.gamma.spec.entries[0]
    first = (stack(conjugated, slot), rep.gamma)
    second = (stack([rep.g(A).dagger() for A in range(6)], slot), rep.gamma_tilde_down)
    return [first, second]


def _antisym_complete(rep: GammaRep6) -> List[Part]:
    lhs = contract(rep.gamma, rep.gamma_tilde_down, [(0, 0)])
    rhs = Tensor.from_function(lhs.spec, lambda a, b, c, d: 2 * (_d(a, d) * _d(b, c) - _d(a, c) * _d(b, d)))
    return [(lhs, rhs)]


def _dual3(rep: GammaRep6) -> List[Part]:
    pairs = [(3, 0), (4, 1), (5, 2)]
    g = contract(rep.eps_up3_down3, rep.g_gt_g, pairs).scale(Fraction(-1, 6))
    gt = contract(rep.eps_up3_down3, rep.gt_g_gt, pairs).scale(Fraction(1, 6))
    return [(rep.g3, g), (rep.gt3, gt)]


def selfdual_checks(rep: GammaRep6) -> Dict[str, bool]:
    """Projector and Hodge-star properties the DUAL3 entry also has to satisfy"""
    idempotent = True
    double_dual = True
    for form in three_form_basis():
        plus, minus = project_selfdual3(rep, form)
        again, rest = project_selfdual3(rep, plus)
        idempotent = idempotent and again == plus and rest.is_zero()
        dual = hodge_dual3(rep, form).relabel(form.spec)
        double_dual = double_dual and hodge_dual3(rep, dual).relabel(form.spec) == form
    return {
        'selfdual_dimension_is_ten': selfdual_dimension(rep) == 10,
        'projector_idempotent': idempotent,
        'double_dual_is_identity': double_dual,
    }


def _sym_complete(rep: GammaRep6) -> List[Part]:
    lhs = contract(rep.g3, rep.gt3_down, [(0, 0), (1, 1), (2, 2)])
    rhs = Tensor.from_function(lhs.spec, lambda a, b, c, d: -24 * (_d(a, c) * _d(b, d) + _d(a, d) * _d(b, c)))
    return [(lhs, rhs)]


def _basis_complete(rep: GammaRep6) -> List[Part]:
    product = contract(rep.g2, rep.g2_down, [(0, 0), (1, 1)]).scale(Fraction(-1, 8))
    identity = Tensor.from_function(product.spec, lambda a, b, c, d: Fraction(_d(a, b) * _d(c, d), 4))
    lhs = product + identity
    rhs = Tensor.from_function(lhs.spec, lambda a, b, c, d: _d(a, d) * _d(c, b))
    return [(lhs, rhs)]


def _gtg(rep: GammaRep6) -> List[Part]:
    half = Fraction(1, 2)
    lowered = contract(rep.gamma_tilde, rep.eps_spinor_down, [(1, 2), (2, 3)]).scale(half)
    raised = contract(rep.gamma, rep.eps_spinor_up, [(1, 2), (2, 3)]).scale(half)
    return [(rep.gamma, lowered), (rep.gamma_tilde, raised)]


def _g2_g(rep: GammaRep6) -> Tensor:
    """(gamma^{[A} gamma-tilde^{B]} gamma^C)_{alpha gamma} laid out [A, B, C, alpha, gamma]"""
    return contract(rep.g2, rep.gamma, [(3, 1)]).transpose([0, 1, 3, 2, 4])


def _minus(rep: GammaRep6) -> List[Part]:
    x = _g2_g(rep)
    lhs = x - x.transpose([0, 1, 2, 4, 3])
    eta, g = rep.eta6, rep.gamma
    rhs = Tensor.from_function(lhs.spec, lambda A, B, C, a, c: 2 * eta[B, C] * g[A, a, c] - 2 * eta[C, A] * g[B, a, c])
    return [(lhs, rhs)]


def _plus(rep: GammaRep6) -> List[Part]:
    x = _g2_g(rep)
    return [(x + x.transpose([0, 1, 2, 4, 3]), rep.g3.scale(2))]


def _minus2(rep: GammaRep6) -> List[Part]:
    y = contract(rep.g2, rep.g3_down, [(3, 3)]).transpose([0, 1, 3, 4, 5, 2, 6])
    lhs = y - y.transpose([0, 1, 2, 3, 4, 6, 5])
    eps = rep.eps6_up
    for p in (2, 3, 4, 5):
        eps = lower_index(eps, p)
    eps_term = contract(eps, rep.gamma, [(5, 0)]).scale(2)
    g_low = rep.gamma_down
    delta_term = Tensor.from_function(
        lhs.spec, lambda A, B, C, D, E, a, c: _d(A, C) * _d(B, D) * g_low[E, a, c])
    delta_term = brace_project(delta_term, [2, 3, 4], "antisym").scale(12)
    return [(lhs, eps_term - delta_term)]


def _l8(rep: GammaRep6) -> List[Part]:
    lhs = contract(rep.gamma, lower_index(rep.g_gt, 0), [(0, 0)]).transpose([2, 0, 1, 3, 4])
    g = rep.gamma
    rhs = Tensor.from_function(lhs.spec, lambda B, a, b, c, d: 2 * (
        _d(a, d) * g[B, b, c] + _d(b, d) * g[B, c, a] + _d(c, d) * g[B, a, b]))
    return [(lhs, rhs)]


def _l6(rep: GammaRep6) -> List[Part]:
    lhs = contract(rep.g2, rep.gamma_down, [(1, 0)])
    g = rep.gamma
    rhs = Tensor.from_function(lhs.spec, lambda A, a, b, c, d: (
        2 * _d(b, c) * g[A, a, d] - 2 * _d(b, d) * g[A, a, c] - _d(a, b) * g[A, c, d]))
    return [(lhs, rhs)]


def _l7(rep: GammaRep6) -> List[Part]:
    lhs = contract(rep.g3, rep.g2_down, [(0, 0), (1, 1)])
    g = rep.gamma
    rhs = Tensor.from_function(lhs.spec, lambda C, a, b, c, d: 4 * (_d(a, d) * g[C, b, c] + _d(b, d) * g[C, a, c]))
    return [(lhs, rhs)]


def _ggd_delta(rep: GammaRep6, spec) -> Tensor:
    """3 gamma_{[A} gamma-tilde_B delta_{C]}^D laid out [A, B, C, D, alpha, delta]"""
    g_gt = rep.g_gt_down
    t = Tensor.from_function(spec, lambda A, B, C, D, a, d: g_gt[A, B, a, d] * _d(C, D))
    return brace_project(t, [0, 1, 2], "antisym").scale(3)


def _ggd_eps(rep: GammaRep6) -> Tensor:
    """1/2 eps_{ABC}^{DEF} gamma_E gamma-tilde_F"""
    return contract(rep.eps_down3_up3, rep.g_gt_down, [(4, 0), (5, 1)]).scale(Fraction(1, 2))


def _ggd_a_lhs(rep: GammaRep6) -> Tensor:
    return contract(rep.g3_down, rep.gamma_tilde, [(4, 1)]).transpose([0, 1, 2, 4, 3, 5])


def _ggd_b_lhs(rep: GammaRep6) -> Tensor:
    return contract(rep.gamma, rep.gt3_down, [(2, 3)]).transpose([2, 3, 4, 0, 1, 5])


def _ggd_a(rep: GammaRep6) -> List[Part]:
    lhs = _ggd_a_lhs(rep)
    return [(lhs, _ggd_delta(rep, lhs.spec) - _ggd_eps(rep))]


def _ggd_b(rep: GammaRep6) -> List[Part]:
    lhs = _ggd_b_lhs(rep)
    return [(lhs, _ggd_delta(rep, lhs.spec) + _ggd_eps(rep))]


def _six_gamma(rep: GammaRep6) -> List[Part]:
    a = _ggd_a_lhs(rep)
    b = _ggd_b_lhs(rep)
    lhs = _ggd_delta(rep, a.spec).scale(2)
    return [(lhs, a + b)]


def _epep6(rep: GammaRep6) -> List[Part]:
    lhs = contract(rep.eps6_down, rep.eps6_up, [(4, 4), (5, 5)])
    entries = {}
    for lower, _ in signed_permutations(6):
        abcd = lower[:4]
        for perm, sign in signed_permutations(4):
            entries[abcd + tuple(abcd[p] for p in perm)] = -2 * sign
    return [(lhs, Tensor.from_sparse(lhs.spec, entries))]


CATALOG6: Dict[str, IdentityEntry] = {e.id: e for e in (
    IdentityEntry("ALGEBRA", "gamma^A gt^B + gamma^B gt^A = 2 eta^AB", "A B alpha beta", _algebra),
    IdentityEntry("TR2", "tr(gamma^A gt^B) = 4 eta^AB", "A B", _tr2),
    IdentityEntry("TR4", "tr(gamma^A gt^B gamma^C gt^D) = 4(eta eta - eta eta + eta eta)", "A B C D", _tr4),
    IdentityEntry("TR6", "tr(gamma^[ABC] gt_[DEF]) = 4 eps^ABC_DEF - 24 delta^[A_D delta^B_E delta^C]_F",
                  "A B C D E F", _tr6),
    IdentityEntry("HERM", "gamma^0 gamma^A+ gamma^0 = gamma^A, gamma^A+ = gt_A", "part A alpha beta", _herm),
    IdentityEntry("ANTISYM_COMPLETE", "gamma^A_ab gt_A^cd = 2(delta delta - delta delta)",
                  "alpha beta gamma delta", _antisym_complete),
    IdentityEntry("DUAL3", "gamma^[A gt^B gamma^C] = -1/6 eps^ABC_DEF gamma^D gt^E gamma^F (and tilde, +1/6)",
                  "part A B C alpha beta", _dual3, selfdual_checks),
    IdentityEntry("SYM_COMPLETE", "(gamma^[ABC])_ab (gt_[ABC])^cd = -24(delta delta + delta delta)",
                  "alpha beta gamma delta", _sym_complete),
    IdentityEntry("BASIS_COMPLETE", "-1/8 (gamma^[A gt^B])(gamma_[A gt_B]) + 1/4 delta delta = delta delta",
                  "alpha beta gamma delta", _basis_complete),
    IdentityEntry("GTG", "gamma^A_ab = 1/2 eps_abcd gt^A cd, gt^A ab = 1/2 eps^abcd gamma^A_cd",
                  "part A alpha beta", _gtg),
    IdentityEntry("MINUS", "gamma^[A gt^B] gamma^C - transpose = 2 eta^BC gamma^A - 2 eta^CA gamma^B",
                  "A B C alpha gamma", _minus),
    IdentityEntry("PLUS", "gamma^[A gt^B] gamma^C + transpose = 2 gamma^[A gt^B gamma^C]",
                  "A B C alpha gamma", _plus),
    IdentityEntry("MINUS2", "gamma^[A gt^B] gamma_[CDE] - transpose = 2 eps^AB_CDEF gamma^F - 12 delta delta gamma",
                  "A B C D E alpha gamma", _minus2),
    IdentityEntry("L8", "gamma^A_ab (gamma_A gt^B)_c^d = 2 delta gamma + 2 delta gamma + 2 delta gamma",
                  "B alpha beta gamma delta", _l8),
    IdentityEntry("L6", "(gamma^[A gt^B])_a^b gamma_B cd = 2 delta gamma - 2 delta gamma - delta gamma",
                  "A alpha beta gamma delta", _l6),
    IdentityEntry("L7", "(gamma^[ABC])_ab (gamma_[A gt_B])_c^d = 4(delta gamma^C + delta gamma^C)",
                  "C alpha beta gamma delta", _l7),
    IdentityEntry("GGD_A", "gamma_[ABC] gt^D = 3 gamma_[A gt_B delta_C]^D - 1/2 eps_ABC^DEF gamma_E gt_F",
                  "A B C D alpha delta", _ggd_a),
    IdentityEntry("GGD_B", "gamma^D gt_[ABC] = 3 gamma_[A gt_B delta_C]^D + 1/2 eps_ABC^DEF gamma_E gt_F",
                  "A B C D alpha delta", _ggd_b),
    IdentityEntry("SIXGAMMA", "6 gamma_[A gt_B delta_C]^D = gamma_[ABC] gt^D + gamma^D gt_[ABC]",
                  "A B C D alpha delta", _six_gamma),
    IdentityEntry("EPEP6", "eps_ABCDIJ eps^EFGHIJ = -48 delta_A^[E delta_B^F delta_C^G delta_D^H]",
                  "A B C D E F G H", _epep6),
)}

IDENTITY_IDS6 = tuple(sorted(CATALOG6))


def verify_identity6(rep: GammaRep6, id: str) -> ResidualReport:
    """Evaluate one catalog identity exhaustively over its free indices"""
    entry = CATALOG6.get(id)
    if entry is None:
        raise CatalogError(f"Unknown six-dimensional identity: {id}")
    report = ResidualReport.from_parts(id, entry.evaluate(rep))
    checks = entry.side_checks(rep)
    report.notes.update({name: str(ok).lower() for name, ok in checks.items()})
    report.passed = report.passed and all(checks.values())
    logger.debug(f"Verified identity | Passed: {report.passed} | Tuples: {report.tuple_count}", check=id)
    return report
