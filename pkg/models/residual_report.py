from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple
import json

from models.errors import ShapeError
from models.gaussian_rational import ZERO, GaussianRational
from models.tensor import Tensor


@dataclass
class ResidualReport:
    """Outcome of an exhaustive LHS - RHS evaluation"""

    id: str
    passed: bool
    tuple_count: int
    max_residual_re: Fraction = Fraction(0)
    max_residual_im: Fraction = Fraction(0)
    first_failure: Optional[List[int]] = None
    informational: bool = False
    notes: Dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_tensors(cls, id: str, lhs: Tensor, rhs: Tensor, **kwargs) -> "ResidualReport":
        """Compare two tensors of equal shape component by component"""
        if lhs.shape != rhs.shape:
            raise ShapeError(f"{id}: shape mismatch {lhs.shape} vs {rhs.shape}")
        residual = lhs - rhs
        return cls.from_residual(id, residual.nonzero, lhs.spec.size, **kwargs)

    @classmethod
    def from_parts(cls, id: str, parts: Sequence[Tuple[Tensor, Tensor]], **kwargs) -> "ResidualReport":
        """Merge several (lhs, rhs) pairs; the part number prefixes failing tuples when there is more than one"""
        residual = {}
        tuple_count = 0
        for number, (lhs, rhs) in enumerate(parts):
            if lhs.shape != rhs.shape:
                raise ShapeError(f"{id}: shape mismatch {lhs.shape} vs {rhs.shape}")
            prefix = (number,) if len(parts) > 1 else ()
            for index, value in (lhs - rhs).nonzero.items():
                residual[prefix + index] = value
            tuple_count += lhs.spec.size
        return cls.from_residual(id, residual, tuple_count, **kwargs)

    @classmethod
    def from_residual(cls, id: str, residual: Dict[tuple, GaussianRational],
                      tuple_count: int, **kwargs) -> "ResidualReport":
        """Build a report from the nonzero residual components"""
        worst = ZERO
        for value in residual.values():
            if value.abs2() > worst.abs2():
                worst = value
        first = min(residual) if residual else None
        return cls(
            id=id,
            passed=not residual,
            tuple_count=tuple_count,
            max_residual_re=abs(worst.re),
            max_residual_im=abs(worst.im),
            first_failure=list(first) if first is not None else None,
            **kwargs,
        )

    def to_dict(self) -> Dict:
        """Convert the report to its JSON object form"""
        data = {
            'id': self.id,
            'pass': self.passed,
            'tuple_count': self.tuple_count,
            'max_residual_re': str(self.max_residual_re),
            'max_residual_im': str(self.max_residual_im),
            'first_failure': self.first_failure,
        }
        if self.informational:
            data['informational'] = True
        if self.notes:
            data['notes'] = dict(sorted(self.notes.items()))
        return data

    @classmethod
    def from_dict(cls, data: Dict) -> 'ResidualReport':
        return cls(
            id=data['id'],
            passed=data['pass'],
            tuple_count=data['tuple_count'],
            max_residual_re=Fraction(data.get('max_residual_re', '0')),
            max_residual_im=Fraction(data.get('max_residual_im', '0')),
            first_failure=data.get('first_failure'),
            informational=data.get('informational', False),
            notes=data.get('notes', {}),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
