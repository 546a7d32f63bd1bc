from dataclasses import dataclass
from functools import cached_property
from typing import List

from models.errors import RepresentationError
from models.gaussian_rational import I
from models.tensor import (
    IndexKind, IndexSpec, Tensor, Variance, brace_project, contract, epsilon_tensor, kronecker, lower_index,
    matmul, metric, metric_signs, stack,
)
from utils.logger import logger

ST = IndexKind.SPACETIME4
UN = IndexKind.SPINOR4_UNDOTTED
DO = IndexKind.SPINOR4_DOTTED
UP = Variance.UPPER
LO = Variance.LOWER

_PAULI = (
    {(0, 0): 1, (1, 1): 1},
    {(0, 1): 1, (1, 0): 1},
    {(0, 1): -I, (1, 0): I},
    {(0, 0): 1, (1, 1): -1},
)


def _two_by_two(kind_a: IndexKind, kind_b: IndexKind, variance: Variance, entries) -> Tensor:
    return Tensor.from_sparse(IndexSpec.of((kind_a, variance), (kind_b, variance)), entries)


@dataclass(frozen=True)
class SigmaRep4:
    """Validated four-dimensional sigma matrices with their epsilon symbols"""
    sigma: Tensor           # sigma^mu_{alpha alphadot}
    sigma_tilde: Tensor     # sigma-tilde^{mu alphadot alpha}
    eta4: Tensor
    eps4_up: Tensor
    eps4_down: Tensor
    eps2: Tensor            # eps_{alpha beta}, eps_12 = 1
    eps2_bar: Tensor        # epsbar_{alphadot betadot}, epsbar_12 = 1
    eps2_inv: Tensor
    eps2_bar_inv: Tensor

    @property
    def orientation(self):
        return {'eps4': 'eps_{0123} = -eps^{0123} = 1', 'eps2': 'eps_12 = epsbar_12 = 1'}

    def s(self, mu: int) -> Tensor:
        return self.sigma.slice(0, mu)

    def st(self, mu: int) -> Tensor:
        return self.sigma_tilde.slice(0, mu)

    @cached_property
    def sigma_down(self) -> Tensor:
        return lower_index(self.sigma, 0)

    @cached_property
    def sigma_tilde_down(self) -> Tensor:
        return lower_index(self.sigma_tilde, 0)

    @cached_property
    def s_st(self) -> Tensor:
        """(sigma^mu sigma-tilde^nu)_alpha^beta laid out [mu, nu, alpha, beta]"""
        return contract(self.sigma, self.sigma_tilde, [(2, 1)]).transpose([0, 2, 1, 3])

    @cached_property
    def st_s(self) -> Tensor:
        """(sigma-tilde^mu sigma^nu)^alphadot_betadot laid out [mu, nu, alphadot, betadot]"""
        return contract(self.sigma_tilde, self.sigma, [(2, 1)]).transpose([0, 2, 1, 3])

    @cached_property
    def s2(self) -> Tensor:
        return brace_project(self.s_st, [0, 1], "antisym")

    @cached_property
    def st2(self) -> Tensor:
        return brace_project(self.st_s, [0, 1], "antisym")

    def fingerprint_tensors(self) -> List[Tensor]:
        return [self.sigma, self.sigma_tilde, self.eps2, self.eps2_bar]


def _validate(rep: SigmaRep4):
    identity = kronecker(UN)
    for mu in range(4):
        for nu in range(4):
            lhs = matmul(rep.s(mu), rep.st(nu)) + matmul(rep.s(nu), rep.st(mu))
            if lhs.data != identity.scale(2 * rep.eta4[mu, nu]).data:
                raise RepresentationError("clifford", f"mu={mu}, nu={nu}")
    for mu in range(4):
        transposed = rep.st(mu).transpose([1, 0])
        related = matmul(rep.eps2, transposed, rep.eps2_bar)
        if related.data != (-rep.s(mu)).data:
            raise RepresentationError("sigma-tilde relation", f"mu={mu}")
    if rep.eps2[0, 1] != 1 or rep.eps2_bar[0, 1] != 1:
        raise RepresentationError("epsilon normalization")
    if matmul(rep.eps2, rep.eps2_inv).data != kronecker(UN).transpose([1, 0]).data:
        raise RepresentationError("epsilon inverse")


def build_sigma4() -> SigmaRep4:
    """sigma = (1, pauli), sigma-tilde = (1, -pauli); validated before return"""
    sigma = stack([_two_by_two(UN, DO, LO, entries) for entries in _PAULI],
                  IndexSpec.of((ST, UP)).entries[0])
    signs = metric_signs(ST)
    tilde = [_two_by_two(DO, UN, UP, {k: signs[mu] * v for k, v in entries.items()})
             for mu, entries in enumerate(_PAULI)]
    sigma_tilde = stack(tilde, IndexSpec.of((ST, UP)).entries[0])
    eps = {(0, 1): 1, (1, 0): -1}
    eps_inv = {(0, 1): -1, (1, 0): 1}
    rep = SigmaRep4(
        sigma=sigma,
        sigma_tilde=sigma_tilde,
        eta4=metric(ST, UP),
        eps4_up=epsilon_tensor(ST, UP),
        eps4_down=epsilon_tensor(ST, LO),
        eps2=_two_by_two(UN, UN, LO, eps),
        eps2_bar=_two_by_two(DO, DO, LO, eps),
        eps2_inv=_two_by_two(UN, UN, UP, eps_inv),
        eps2_bar_inv=_two_by_two(DO, DO, UP, eps_inv),
    )
    _validate(rep)
    logger.debug("Built four-dimensional sigma representation")
    return rep
