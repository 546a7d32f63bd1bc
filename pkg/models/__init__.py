"""
Exact-arithmetic verification library for the six- and four-dimensional
supersymmetry algebras and their gauge-charge extensions.
"""

from .errors import (CatalogError, ConfigError, ContractionError, InvalidKindError, InvalidProjectionError,
                     JetOrderError, RepresentationError, RuleError, ShapeError, VerifierError)
from .gaussian_rational import GaussianRational
from .tensor import IndexKind, Tensor, Variance
from .clifford6 import GammaRep6, build_gamma6
from .sigma4 import SigmaRep4, build_sigma4
from .identities6 import IDENTITY_IDS6, verify_identity6
from .identities4 import IDENTITY_IDS4, verify_identity4
from .residual_report import ResidualReport

__all__ = [
    'CatalogError',
    'ConfigError',
    'ContractionError',
    'GammaRep6',
    'GaussianRational',
    'IDENTITY_IDS4',
    'IDENTITY_IDS6',
    'IndexKind',
    'InvalidKindError',
    'InvalidProjectionError',
    'JetOrderError',
    'RepresentationError',
    'ResidualReport',
    'RuleError',
    'ShapeError',
    'SigmaRep4',
    'Tensor',
    'Variance',
    'VerifierError',
    'build_gamma6',
    'build_sigma4',
    'verify_identity4',
    'verify_identity6',
]
