"""Report models for the flatness verdict, Tor tables and the E1 page."""

from typing import Any, Dict, List, Optional, Tuple

from .group import ZERO, AbelianGroup

Offender = Tuple[str, int]


class FlatnessReport:
    """Flatness of K_0 over RT and degeneration of the Merkurjev spectral sequence.

    link_offenders lists (cone label, degree) for every nonempty face whose
    link has reduced homology below its top degree; global_offenders lists
    the degrees below dim S_Δ where S_Δ itself has reduced homology.
    """

    REQUIRED_FIELDS = ['pure', 'link_offenders', 'global_offenders']

    def __init__(self, pure: bool, link_offenders: List[Offender],
                 global_offenders: List[int], fan_name: Optional[str] = None):
        self.pure = bool(pure)
        self.link_offenders = [(str(label), int(degree)) for label, degree in link_offenders]
        self.global_offenders = [int(d) for d in global_offenders]
        self.fan_name = fan_name

    @property
    def link_conditions_ok(self) -> bool:
        return not self.link_offenders

    @property
    def global_ok(self) -> bool:
        return not self.global_offenders

    @property
    def cohen_macaulay(self) -> bool:
        """Reisner's criterion for the Stanley-Reisner ring of S_Δ."""
        return self.link_conditions_ok and self.global_ok

    @property
    def flat(self) -> bool:
        return self.pure and self.cohen_macaulay

    @property
    def merkurjev_degenerates(self) -> bool:
        return self.flat

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'fan': self.fan_name,
            'pure': self.pure,
            'link_conditions_ok': self.link_conditions_ok,
            'link_offenders': [{'face': label, 'degree': degree} for label, degree in self.link_offenders],
            'global_ok': self.global_ok,
            'global_offenders': list(self.global_offenders),
            'cohen_macaulay': self.cohen_macaulay,
            'flat': self.flat,
            'merkurjev_degenerates': self.merkurjev_degenerates,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FlatnessReport':
        """Create FlatnessReport from dictionary."""
        for field in cls.REQUIRED_FIELDS:
            if field not in data:
                raise ValueError(f"Missing required field: {field}")
        offenders = [(o['face'], o['degree']) for o in data['link_offenders']]
        return cls(data['pure'], offenders, data['global_offenders'], data.get('fan'))


class TorTable:
    """Groups Tor_p for p = 1..n, zero entries included."""

    def __init__(self, n: int, entries: Dict[int, AbelianGroup], label: str = 'K_0'):
        self.n = n
        self.entries = {p: entries.get(p, ZERO) for p in range(1, n + 1)}
        self.label = label
        self._validate(entries)

    def _validate(self, entries: Dict[int, AbelianGroup]) -> None:
        """Indices must lie in 1..n."""
        for p in entries:
            if not 1 <= p <= self.n:
                raise ValueError(f"Invalid Tor index: {p}. Must be between 1 and {self.n}")

    def __getitem__(self, p: int) -> AbelianGroup:
        return self.entries.get(p, ZERO)

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.entries.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'coefficients': self.label,
            'entries': {str(p): str(g) for p, g in self.entries.items()},
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorTable):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __repr__(self) -> str:
        body = ', '.join(f"Tor_{p}={g}" for p, g in self.entries.items())
        return f"TorTable(n={self.n}, {body})"


class E1Page:
    """First page of the hypercohomology spectral sequence, columns 1..n+1.

    Entries absent from the map are zero.
    """

    def __init__(self, n: int, entries: Dict[Tuple[int, int], AbelianGroup]):
        self.n = n
        self.entries = {key: g for key, g in entries.items() if not g.is_zero()}
        self._validate()

    def _validate(self) -> None:
        for p, q in self.entries:
            if not 1 <= p <= self.n + 1:
                raise ValueError(f"Column {p} lies outside 1..{self.n + 1}")

    def __getitem__(self, key: Tuple[int, int]) -> AbelianGroup:
        return self.entries.get(key, ZERO)

    @property
    def tor0_rank_bound(self) -> int:
        """Σ_p rank E_1^{p,-p}: an upper bound for the rank of Z ⊗_RT K_0."""
        return sum(self[(p, -p)].rank for p in range(1, self.n + 2))

    def column(self, p: int) -> Dict[int, AbelianGroup]:
        return {q: g for (c, q), g in sorted(self.entries.items()) if c == p}

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'entries': [
                {'p': p, 'q': q, 'group': str(g)} for (p, q), g in sorted(self.entries.items())
            ],
            'tor0_rank_bound': self.tor0_rank_bound,
        }
