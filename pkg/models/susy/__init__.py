"""
Graded symbolic engine: field models, supercharge actions, closure,
gauge towers, derived relations and the superfield expansion.
"""

from .catalog import MODEL_IDS, load_model
from .charges import P, Q, Qbar, Z
from .closure import check_closure, graded_bracket_on
from .model import Model, act
from .relations import RELATION_IDS, check_pseudo_majorana, check_relation, relations_for
from .superfield import check_superfield, superfield_expand
from .tower import check_tower, gauge_tower, tower_formula_residual

__all__ = [
    'MODEL_IDS',
    'Model',
    'P',
    'Q',
    'Qbar',
    'RELATION_IDS',
    'Z',
    'act',
    'check_closure',
    'check_pseudo_majorana',
    'check_relation',
    'check_superfield',
    'check_tower',
    'gauge_tower',
    'graded_bracket_on',
    'load_model',
    'relations_for',
    'superfield_expand',
    'tower_formula_residual',
]
