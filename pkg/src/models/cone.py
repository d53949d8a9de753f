"""Rational polyhedral cone model."""

from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple

Vector = Tuple[int, ...]


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


class RationalCone:
    """Convex polyhedral cone in Q^n.

    generators: rays plus lineality directions stored as +/- pairs.
    inequalities: covectors a with <a, x> >= 0; equalities appear as +/- pairs.
    Either description may be None until src.core.polyhedral.dual_description
    fills it in.
    """

    def __init__(self, n: int, generators: Optional[Sequence[Sequence[int]]] = None,
                 inequalities: Optional[Sequence[Sequence[int]]] = None):
        self.n = n
        self.generators: Optional[List[Vector]] = self._clean(generators)
        self.inequalities: Optional[List[Vector]] = self._clean(inequalities)
        self._validate()

    def _clean(self, vectors: Optional[Sequence[Sequence[int]]]) -> Optional[List[Vector]]:
        if vectors is None:
            return None
        cleaned = []
        for v in vectors:
            p = primitive(v)
            if any(p) and p not in cleaned:
                cleaned.append(p)
        return sorted(cleaned)

    def _validate(self) -> None:
        """Validate shapes."""
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"Invalid ambient rank: {self.n}")
        if self.generators is None and self.inequalities is None:
            raise ValueError("A cone needs generators or inequalities")
        for vectors in (self.generators or [], self.inequalities or []):
            for v in vectors:
                if len(v) != self.n:
                    raise ValueError(f"Vector {list(v)} does not live in rank {self.n}")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'n': self.n,
            'generators': None if self.generators is None else [list(v) for v in self.generators],
            'inequalities': None if self.inequalities is None else [list(v) for v in self.inequalities],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RationalCone':
        """Create RationalCone from dictionary."""
        return cls(data['n'], data.get('generators'), data.get('inequalities'))

    @classmethod
    def full_space(cls, n: int) -> 'RationalCone':
        gens = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            gens.append(tuple(e))
            gens.append(tuple(-x for x in e))
        return cls(n, gens, [])

    def __repr__(self) -> str:
        return (f"RationalCone(n={self.n}, generators={self.generators}, "
                f"inequalities={self.inequalities})")
