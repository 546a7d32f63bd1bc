from dataclasses import dataclass
from typing import Tuple

from models.errors import RuleError

CHARGE_KINDS = ("Q", "Qbar", "P", "Z")
FERMIONIC_KINDS = ("Q", "Qbar")


@dataclass(frozen=True, order=True)
class Charge:
    """
    An elementary charge. ``index`` holds (i, alpha) for six-dimensional
    supercharges, (alpha,) or (alphadot,) for four-dimensional ones and the
    lower spacetime index for P and Z.
    """
    kind: str
    index: Tuple[int, ...]

    def __post_init__(self):
        if self.kind not in CHARGE_KINDS:
            raise RuleError(f"Unknown charge kind {self.kind}")

    @property
    def parity(self) -> int:
        return 1 if self.kind in FERMIONIC_KINDS else 0

    @property
    def label(self) -> str:
        return f"{self.kind}({','.join(str(i) for i in self.index)})"

    def __str__(self) -> str:
        return self.label


def Q(*index: int) -> Charge:
    return Charge("Q", tuple(index))


def Qbar(alphadot: int) -> Charge:
    return Charge("Qbar", (alphadot,))


def P(A: int) -> Charge:
    return Charge("P", (A,))


def Z(A: int) -> Charge:
    return Charge("Z", (A,))


def sequence_parity(charges) -> int:
    return sum(c.parity for c in charges) % 2
