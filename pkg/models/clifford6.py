"""
Six-dimensional chiral gamma matrices.

The representation uses antisymmetric 4x4 blocks. gamma^A is fixed from the
basis of elementary antisymmetric matrices E_ab (+1 at (a, b), -1 at (b, a)),
gamma-tilde^A is derived from it by raising both spinor indices with the
spinor Levi-Civita symbol (eps^{1234} = eps_{1234} = 1), and the bundle is
validated against the Clifford relation, antisymmetry, hermiticity and the
symplectic inverse before it is returned.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from models.errors import ConfigError, RepresentationError, ShapeError
from models.gaussian_rational import I, GaussianRational
from models.tensor import (
    IndexKind, IndexSpec, Tensor, Variance, brace_project, contract, epsilon_tensor, kronecker,
    lower_index, matmul, metric, metric_signs, raise_index, signed_permutations, stack,
)
from utils.logger import logger

ST = IndexKind.SPACETIME6
SP = IndexKind.SPINOR6
UP = Variance.UPPER
LO = Variance.LOWER

# (a, b, coefficient) triples over 1-based spinor indices; E_ab antisymmetric
_GAMMA_TABLE = (
    ((1, 2, 1), (3, 4, -1)),
    ((1, 2, 1), (3, 4, 1)),
    ((1, 3, 1), (2, 4, -1)),
    ((1, 3, I), (2, 4, I)),
    ((1, 4, 1), (2, 3, 1)),
    ((1, 4, I), (2, 3, -I)),
)


def _antisymmetric_matrix(entries, spec: IndexSpec) -> Tensor:
    sparse = {}
    for a, b, c in entries:
        c = GaussianRational.coerce(c)
        sparse[(a - 1, b - 1)] = c
        sparse[(b - 1, a - 1)] = -c
    return Tensor.from_sparse(spec, sparse)


def spinor_epsilon(variance: Variance) -> Tensor:
    """eps_{alpha beta gamma delta} (or upper) with component (1,2,3,4) = 1"""
    spec = IndexSpec.of(*([(SP, variance)] * 4))
    return Tensor.from_sparse(spec, {p: s for p, s in signed_permutations(4)})


def symplectic_form(N: int) -> Tuple[Tensor, Tensor]:
    """E^{ij} block-diagonal [[0, 1], [-1, 0]] and its inverse Ebar_{ij} = -E"""
    sym = IndexKind.SYMPLECTIC
    up = IndexSpec.of((sym, UP), (sym, UP), N=N)
    down = IndexSpec.of((sym, LO), (sym, LO), N=N)
    e, e_bar = {}, {}
    for block in range(N):
        i, j = 2 * block, 2 * block + 1
        e[(i, j)], e[(j, i)] = 1, -1
        e_bar[(i, j)], e_bar[(j, i)] = -1, 1
    return Tensor.from_sparse(up, e), Tensor.from_sparse(down, e_bar)


@dataclass(frozen=True)
class GammaRep6:
    """Validated bundle of six-dimensional gamma matrices and metric data"""
    gamma: Tensor           # (gamma^A)_{alpha beta}
    gamma_tilde: Tensor     # (gamma-tilde^A)^{alpha beta}
    eta6: Tensor            # eta^{AB}
    eta6_down: Tensor       # eta_{AB}
    eps6_up: Tensor
    eps6_down: Tensor
    eps_spinor_down: Tensor
    eps_spinor_up: Tensor
    symplectic: Tensor      # E^{ij}
    symplectic_inv: Tensor  # Ebar_{ij}
    N: int

    @property
    def orientation(self) -> Dict[str, str]:
        """Conventions recorded in report headers"""
        return {
            'eps6': 'eps^{012345} = 1',
            'eps_spinor': 'eps_{1234} = eps^{1234} = 1',
            'metric': 'diag(+1,-1,-1,-1,-1,-1)',
        }

    # matrices for one spacetime index value

    def g(self, A: int) -> Tensor:
        return self.gamma.slice(0, A)

    def gt(self, A: int) -> Tensor:
        return self.gamma_tilde.slice(0, A)

    def g_low(self, A: int) -> Tensor:
        return self.g(A).scale(metric_signs(ST)[A])

    def gt_low(self, A: int) -> Tensor:
        return self.gt(A).scale(metric_signs(ST)[A])

    # composite tensors used by the identity catalog and the engine

    @cached_property
    def gamma_down(self) -> Tensor:
        """(gamma_A)_{alpha beta}"""
        return lower_index(self.gamma, 0)

    @cached_property
    def gamma_tilde_down(self) -> Tensor:
        return lower_index(self.gamma_tilde, 0)

    @cached_property
    def g_gt(self) -> Tensor:
        """(gamma^A gamma-tilde^B)_alpha^beta laid out [A, B, alpha, beta]"""
        return contract(self.gamma, self.gamma_tilde, [(2, 1)]).transpose([0, 2, 1, 3])

    @cached_property
    def g_gt_down(self) -> Tensor:
        return lower_index(lower_index(self.g_gt, 0), 1)

    @cached_property
    def g2(self) -> Tensor:
        """gamma^{[A} gamma-tilde^{B]} laid out [A, B, alpha, beta]"""
        return brace_project(self.g_gt, [0, 1], "antisym")

    @cached_property
    def g2_down(self) -> Tensor:
        return lower_index(lower_index(self.g2, 0), 1)

    @cached_property
    def g_gt_g(self) -> Tensor:
        """gamma^A gamma-tilde^B gamma^C laid out [A, B, C, alpha, beta]"""
        t = contract(self.g_gt, self.gamma, [(3, 1)])
        return t.transpose([0, 1, 3, 2, 4])

    @cached_property
    def gt_g_gt(self) -> Tensor:
        """gamma-tilde^A gamma^B gamma-tilde^C laid out [A, B, C, alpha, beta]"""
        gt_g = contract(self.gamma_tilde, self.gamma, [(2, 1)]).transpose([0, 2, 1, 3])
        return contract(gt_g, self.gamma_tilde, [(3, 1)]).transpose([0, 1, 3, 2, 4])

    @cached_property
    def g3(self) -> Tensor:
        """gamma^{[A} gamma-tilde^B gamma^{C]}"""
        return brace_project(self.g_gt_g, [0, 1, 2], "antisym")

    @cached_property
    def g3_down(self) -> Tensor:
        t = self.g3
        for p in range(3):
            t = lower_index(t, p)
        return t

    @cached_property
    def gt3(self) -> Tensor:
        """gamma-tilde^{[A} gamma^B gamma-tilde^{C]}"""
        return brace_project(self.gt_g_gt, [0, 1, 2], "antisym")

    @cached_property
    def gt3_down(self) -> Tensor:
        t = self.gt3
        for p in range(3):
            t = lower_index(t, p)
        return t

    @cached_property
    def eps_up3_down3(self) -> Tensor:
        """eps^{ABC}_{DEF}"""
        t = self.eps6_up
        for p in (3, 4, 5):
            t = lower_index(t, p)
        return t

    @cached_property
    def eps_down3_up3(self) -> Tensor:
        """eps_{ABC}^{DEF}"""
        t = self.eps6_down
        for p in (3, 4, 5):
            t = raise_index(t, p)
        return t

    def fingerprint_tensors(self) -> List[Tensor]:
        return [self.gamma, self.gamma_tilde, self.symplectic]


def _validate(rep: GammaRep6):
    identity = kronecker(SP)
    for A in range(6):
        for B in range(6):
            lhs = matmul(rep.g(A), rep.gt(B)) + matmul(rep.g(B), rep.gt(A))
            rhs = identity.scale(2 * rep.eta6[A, B])
            if lhs.data != rhs.data:
                raise RepresentationError("clifford", f"A={A}, B={B}")
    for A in range(6):
        g, gt = rep.g(A), rep.gt(A)
        if g.transpose([1, 0]).data != (-g).data or gt.transpose([1, 0]).data != (-gt).data:
            raise RepresentationError("antisymmetry", f"A={A}")
        if g.dagger().data != rep.gt_low(A).data:
            raise RepresentationError("hermiticity", f"A={A}")
        if matmul(rep.g(0), g.dagger(), rep.g(0)).data != g.data:
            raise RepresentationError("hermiticity", f"gamma0 conjugation, A={A}")
    duality = contract(rep.gamma_tilde, rep.eps_spinor_down, [(1, 2), (2, 3)]).scale(Fraction(1, 2))
    if duality.data != rep.gamma.data:
        raise RepresentationError("duality link")
    product = matmul(rep.symplectic, rep.symplectic_inv)
    if product.data != kronecker(IndexKind.SYMPLECTIC, rep.N).data:
        raise RepresentationError("symplectic inverse")


def build_gamma6(N: int = 1) -> GammaRep6:
    """Build and validate the six-dimensional representation for symplectic rank N"""
    if not isinstance(N, int) or N < 1:
        raise ConfigError(f"N must be a positive integer, got {N!r}")
    matrix_spec = IndexSpec.of((SP, LO), (SP, LO))
    gamma = stack([_antisymmetric_matrix(row, matrix_spec) for row in _GAMMA_TABLE],
                  IndexSpec.of((ST, UP)).entries[0])
    eps_up = spinor_epsilon(UP)
    gamma_tilde = contract(gamma, eps_up, [(1, 2), (2, 3)]).scale(Fraction(1, 2))
    symplectic, symplectic_inv = symplectic_form(N)
    rep = GammaRep6(
        gamma=gamma,
        gamma_tilde=gamma_tilde,
        eta6=metric(ST, UP),
        eta6_down=metric(ST, LO),
        eps6_up=epsilon_tensor(ST, UP),
        eps6_down=epsilon_tensor(ST, LO),
        eps_spinor_down=spinor_epsilon(LO),
        eps_spinor_up=eps_up,
        symplectic=symplectic,
        symplectic_inv=symplectic_inv,
        N=N,
    )
    _validate(rep)
    logger.debug(f"Built six-dimensional gamma representation | N: {N}")
    return rep


def _check_antisymmetric3(H: Tensor):
    if H.rank != 3 or any(slot.kind != ST for slot in H.spec.entries):
        raise ShapeError("Expected a rank-3 six-dimensional spacetime tensor")
    if len({slot.variance for slot in H.spec.entries}) != 1:
        raise ShapeError("Three-form indices must share variance")
    if brace_project(H, [0, 1, 2], "antisym") != H:
        raise ShapeError("Three-form is not totally antisymmetric")


def hodge_dual3(rep: GammaRep6, H: Tensor) -> Tensor:
    """(1/3!) eps_{ABC}^{DEF} H_{DEF}, or the upper-index analogue"""
    eps = rep.eps_down3_up3 if H.spec.entries[0].variance == LO else rep.eps_up3_down3
    return contract(eps, H, [(3, 0), (4, 1), (5, 2)]).scale(Fraction(1, 6))


def project_selfdual3(rep: GammaRep6, H: Tensor) -> Tuple[Tensor, Tensor]:
    """Split an antisymmetric three-form into self-dual and anti-self-dual parts"""
    _check_antisymmetric3(H)
    dual = hodge_dual3(rep, H).relabel(H.spec)
    half = Fraction(1, 2)
    return (H + dual).scale(half), (H - dual).scale(half)


def three_form_basis(variance: Variance = LO) -> List[Tensor]:
    """The 20 unit antisymmetric three-forms e_{[ABC]} with A < B < C"""
    spec = IndexSpec.of((ST, variance), (ST, variance), (ST, variance))
    basis = []
    for A in range(6):
        for B in range(A + 1, 6):
            for C in range(B + 1, 6):
                entries = {}
                for perm, sign in signed_permutations(3):
                    index = tuple((A, B, C)[p] for p in perm)
                    entries[index] = sign
                basis.append(Tensor.from_sparse(spec, entries))
    return basis


def selfdual_dimension(rep: GammaRep6) -> int:
    """Rank of the self-dual projector on the 20-dimensional three-form space"""
    rows = []
    for form in three_form_basis():
        plus, _ = project_selfdual3(rep, form)
        rows.append([QQ(int(v.re.numerator), int(v.re.denominator)) for v in plus.data])
        if any(v.im for v in plus.data):
            raise RepresentationError("self-dual projector is not real")
    return DomainMatrix(rows, (len(rows), len(rows[0])), QQ).rank()
