"""
Error classes raised by the verifier library.

Every class carries an ``error_class`` string which is what the suite runner
records in a failed report entry.
"""

from typing import Optional


class VerifierError(Exception):
    """Base class for all verifier errors"""
    error_class = "verifier-error"


class RepresentationError(VerifierError):
    """A constructed matrix representation violated one of its invariants"""
    error_class = "representation-error"

    def __init__(self, invariant: str, detail: Optional[str] = None):
        self.invariant = invariant
        message = f"Representation invariant violated: {invariant}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class CatalogError(VerifierError):
    error_class = "catalog-error"


class ConfigError(VerifierError):
    error_class = "config-error"


class ContractionError(VerifierError):
    error_class = "contraction-error"


class InvalidKindError(VerifierError):
    error_class = "invalid-kind"


class InvalidProjectionError(VerifierError):
    error_class = "invalid-projection"


class ShapeError(VerifierError):
    error_class = "shape-error"


class JetOrderError(VerifierError):
    """Raised when a derivative would exceed the configured jet order"""
    error_class = "jet-order-error"


class RuleError(VerifierError):
    """Raised when a model has no rule for a (charge, generator) pair"""
    error_class = "rule-error"
