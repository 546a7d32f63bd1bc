from functools import lru_cache
from typing import Callable, Dict, NamedTuple

from models.clifford6 import build_gamma6
from models.errors import CatalogError, ConfigError
from models.sigma4 import build_sigma4
from models.susy.model import DEFAULT_JET_ORDER, Model
from models.susy.rules import build_maxwell4, build_offshell, build_onshell, build_rigid4, build_rigid6
from utils.logger import logger


class ModelEntry(NamedTuple):
    builder: Callable
    dimension: int
    variable_N: bool
    anchor: str


MODEL_CATALOG: Dict[str, ModelEntry] = {
    "6d-tensor-offshell": ModelEntry(build_offshell, 6, False, "off-shell tensor multiplet rules"),
    "6d-tensor-onshell": ModelEntry(build_onshell, 6, False, "on-shell tensor multiplet with gauge charge Z"),
    "6d-toy-rigid": ModelEntry(build_rigid6, 6, True, "rigid zero-mode representation of the (N,0) algebra"),
    "4d-maxwell-onshell": ModelEntry(build_maxwell4, 4, False, "N=1 Maxwell multiplet with gauge charge Z"),
    "4d-toy-rigid": ModelEntry(build_rigid4, 4, False, "rigid conformal Killing one-form representation"),
}

MODEL_IDS = tuple(MODEL_CATALOG)
MAX_JET_ORDER = 6


@lru_cache(maxsize=None)
def _gamma(N: int):
    return build_gamma6(N)


@lru_cache(maxsize=None)
def _sigma():
    return build_sigma4()


def load_model(name: str, N: int = 1, jet_order: int = DEFAULT_JET_ORDER, quotient: bool = True,
               check_grading: bool = True) -> Model:
    """
    Build a fresh model from the catalog. Only the six-dimensional rigid
    model accepts N > 1; the representation bundles are shared between loads.
    """
    entry = MODEL_CATALOG.get(name)
    if entry is None:
        raise CatalogError(f"Unknown model: {name}")
    if N < 1:
        raise ConfigError(f"N must be a positive integer, got {N}")
    if N > 1 and not entry.variable_N:
        raise ConfigError(f"Model {name} is fixed at N=1")
    if not 1 <= jet_order <= MAX_JET_ORDER:
        raise ConfigError(f"Jet order must lie in 1..{MAX_JET_ORDER}, got {jet_order}")
    rep = _gamma(N) if entry.dimension == 6 else _sigma()
    model = entry.builder(rep, jet_order)
    model.quotient_enabled = quotient
    if check_grading:
        model.check_grading()
    logger.info(f"Loaded model | Name: {name} | N: {N} | Jet order: {jet_order} | Quotient: {quotient}")
    return model
