"""Fan data models."""

from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import ConeNotInFan

Cone = Tuple[int, ...]
RayVector = Tuple[int, ...]


class FanData:
    """Unvalidated fan as read from a fan file: rays and maximal cones by index."""

    REQUIRED_FIELDS = ['dim', 'rays', 'cones']

    def __init__(self, dim: int, rays: Sequence[Sequence[int]],
                 cones: Sequence[Sequence[int]], name: Optional[str] = None):
        """Initialize fan data."""
        self.dim = dim
        self.rays = [list(r) for r in rays]
        self.cones = [list(c) for c in cones]
        self.name = name
        self._validate()

    def _validate(self) -> None:
        """Validate shapes only; geometry is checked by validate_fan."""
        if not isinstance(self.dim, int) or isinstance(self.dim, bool) or self.dim < 0:
            raise ValueError(f"Invalid dim: {self.dim}. Must be a nonnegative integer")
        for i, ray in enumerate(self.rays):
            if len(ray) != self.dim:
                raise ValueError(f"Ray {i} has {len(ray)} coordinates, expected {self.dim}")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the fan file record."""
        data: Dict[str, Any] = {'dim': self.dim, 'rays': self.rays, 'cones': self.cones}
        if self.name:
            data['name'] = self.name
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FanData':
        """Create FanData from a fan file record."""
        for field in cls.REQUIRED_FIELDS:
            if field not in data:
                raise ValueError(f"Missing required field: {field}")
        return cls(data['dim'], data['rays'], data['cones'], data.get('name'))


class Fan:
    """Validated regular fan.

    Rays are sorted lexicographically and cones are sorted tuples of ray
    indices; the zero cone is (). Build instances with
    src.core.fans.validate_fan, which checks the geometry.
    """

    def __init__(self, n: int, rays: Sequence[Sequence[int]],
                 max_cones: Sequence[Sequence[int]], name: Optional[str] = None):
        self.n = n
        self.rays: Tuple[RayVector, ...] = tuple(tuple(int(c) for c in r) for r in rays)
        self.max_cones: Tuple[Cone, ...] = tuple(sorted(tuple(sorted(c)) for c in max_cones))
        self.name = name
        self._ray_index = {r: i for i, r in enumerate(self.rays)}
        faces = set()
        for cone in self.max_cones:
            for d in range(len(cone) + 1):
                faces.update(combinations(cone, d))
        self._cones: Tuple[Cone, ...] = tuple(sorted(faces, key=lambda c: (len(c), c)))
        self._cone_set = frozenset(self._cones)

    @property
    def all_cones(self) -> Tuple[Cone, ...]:
        """Every cone, ordered by dimension then lexicographically."""
        return self._cones

    def is_cone(self, cone: Sequence[int]) -> bool:
        return tuple(sorted(cone)) in self._cone_set

    def cones_of_dim(self, d: int) -> List[Cone]:
        """Δ_d."""
        return [c for c in self.all_cones if len(c) == d]

    def max_dim(self) -> int:
        return max(len(c) for c in self.max_cones)

    def is_pure(self) -> bool:
        """All maximal cones have dimension n."""
        return all(len(c) == self.n for c in self.max_cones)

    def full_dimensional_cones(self) -> List[Cone]:
        """Maximal cones of dimension n."""
        return [c for c in self.max_cones if len(c) == self.n]

    def star(self, sigma: Cone) -> List[Cone]:
        """Cones having sigma as a face."""
        s = set(sigma)
        return [c for c in self.all_cones if s.issubset(c)]

    def max_star(self, sigma: Cone) -> List[Cone]:
        """Maximal cones having sigma as a face."""
        s = set(sigma)
        return [c for c in self.max_cones if s.issubset(c)]

    def is_maximal(self, sigma: Cone) -> bool:
        return tuple(sorted(sigma)) in self.max_cones

    def vectors(self, cone: Sequence[int]) -> List[RayVector]:
        return [self.rays[i] for i in cone]

    def cone_from_vectors(self, vectors: Sequence[Sequence[int]]) -> Cone:
        """Resolve ray vectors to a cone of the fan."""
        indices = []
        for v in vectors:
            key = tuple(int(c) for c in v)
            if key not in self._ray_index:
                raise ConeNotInFan(vectors)
            indices.append(self._ray_index[key])
        cone = tuple(sorted(set(indices)))
        if not self.is_cone(cone):
            raise ConeNotInFan(vectors)
        return cone

    def label(self, cone: Sequence[int]) -> str:
        """Cone rendered by its ray vectors, e.g. [[1,0],[0,1]]."""
        return '[' + ','.join('[' + ','.join(str(c) for c in self.rays[i]) + ']' for i in cone) + ']'

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the fan file record."""
        data: Dict[str, Any] = {
            'dim': self.n,
            'rays': [list(r) for r in self.rays],
            'cones': [list(c) for c in self.max_cones],
        }
        if self.name:
            data['name'] = self.name
        return data

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fan):
            return NotImplemented
        return (self.n, self.rays, self.max_cones) == (other.n, other.rays, other.max_cones)

    def __hash__(self) -> int:
        return hash((self.n, self.rays, self.max_cones))

    def __repr__(self) -> str:
        return f"Fan(n={self.n}, rays={len(self.rays)}, max_cones={len(self.max_cones)})"
