"""
Polynomial solution spaces of the linear field equations, computed by exact
nullspace and compared with the closed-form families.
"""

from .ansatz import KINEMATIC_MODELS, LinearConstraintSystem, PolyAnsatz, assemble_system
from .checks import (check_kinematics, degree_bound_report, degree_profile, degree_profile_report, resubstitution_check,
                     selfdual_field_strength)
from .nullspace import SolutionBasis, nullspace_basis
from .templates import TEMPLATE_MODELS, MatchReport, match_template

__all__ = [
    'KINEMATIC_MODELS',
    'LinearConstraintSystem',
    'MatchReport',
    'PolyAnsatz',
    'SolutionBasis',
    'TEMPLATE_MODELS',
    'assemble_system',
    'check_kinematics',
    'degree_bound_report',
    'degree_profile',
    'degree_profile_report',
    'match_template',
    'nullspace_basis',
    'resubstitution_check',
    'selfdual_field_strength',
]
