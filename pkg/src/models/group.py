"""Finitely generated abelian group model."""

from typing import Any, Dict, Iterable, Tuple


class AbelianGroup:
    """Abelian group Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk.

    Instances are immutable and compare by their invariants, so two groups are
    isomorphic exactly when they are equal. Use the constructors in
    src.linalg.groups to build a group from arbitrary cyclic orders.
    """

    __slots__ = ('_free_rank', '_torsion')

    def __init__(self, free_rank: int = 0, torsion: Iterable[int] = ()):
        """Initialize and validate the invariants."""
        object.__setattr__(self, '_free_rank', free_rank)
        object.__setattr__(self, '_torsion', tuple(torsion))
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("AbelianGroup is immutable")

    def _validate(self) -> None:
        """Validate the invariant-factor chain."""
        if not isinstance(self._free_rank, int) or self._free_rank < 0:
            raise ValueError(f"Invalid free rank: {self._free_rank}")
        for d in self._torsion:
            if not isinstance(d, int) or d < 2:
                raise ValueError(f"Invalid torsion coefficient: {d}. Must be an integer >= 2")
        for a, b in zip(self._torsion, self._torsion[1:]):
            if b % a != 0:
                raise ValueError(f"Torsion {list(self._torsion)} is not a divisibility chain")

    @property
    def free_rank(self) -> int:
        return self._free_rank

    @property
    def torsion(self) -> Tuple[int, ...]:
        return self._torsion

    @property
    def rank(self) -> int:
        return self._free_rank

    def is_zero(self) -> bool:
        return self._free_rank == 0 and not self._torsion

    def generator_count(self) -> int:
        """Minimal number of generators."""
        return self._free_rank + len(self._torsion)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self._free_rank == other._free_rank and self._torsion == other._torsion

    def __hash__(self) -> int:
        return hash((self._free_rank, self._torsion))

    def __str__(self) -> str:
        terms = []
        if self._free_rank == 1:
            terms.append('Z')
        elif self._free_rank > 1:
            terms.append(f'Z^{self._free_rank}')
        terms.extend(f'Z/{d}' for d in self._torsion)
        return ' + '.join(terms) if terms else '0'

    def __repr__(self) -> str:
        return f"AbelianGroup({self})"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {'free_rank': self._free_rank, 'torsion': list(self._torsion)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'AbelianGroup':
        """Create AbelianGroup from dictionary."""
        return cls(data.get('free_rank', 0), data.get('torsion', []))

    @classmethod
    def zero(cls) -> 'AbelianGroup':
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> 'AbelianGroup':
        return cls(rank, ())

    @classmethod
    def cyclic(cls, order: int) -> 'AbelianGroup':
        """Z/order; order 0 gives Z and order 1 the zero group."""
        if order == 0:
            return cls(1, ())
        if abs(order) == 1:
            return cls(0, ())
        return cls(0, (abs(order),))


ZERO = AbelianGroup.zero()
INTEGERS = AbelianGroup.free(1)
