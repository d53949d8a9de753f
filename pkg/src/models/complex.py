"""Simplicial complex model."""

from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

Face = Tuple[int, ...]


class SimplicialComplex:
    """Finite abstract simplicial complex with the empty face.

    Vertices are integer labels (ray indices for S_Δ); faces are sorted
    tuples of labels. Vertex order fixes the orientation of every face.
    """

    def __init__(self, vertices: Iterable[int], faces: Iterable[Sequence[int]]):
        """Initialize from a vertex list and a face-closed set of faces."""
        self.vertices: Tuple[int, ...] = tuple(sorted(set(vertices)))
        self.faces: FrozenSet[Face] = frozenset(tuple(sorted(f)) for f in faces) | {()}
        self._validate()
        self._by_dim: Dict[int, List[Face]] = {}
        for f in sorted(self.faces):
            self._by_dim.setdefault(len(f) - 1, []).append(f)

    def _validate(self) -> None:
        """Faces closed under subsets, every vertex a face."""
        vertex_set = set(self.vertices)
        for v in self.vertices:
            if (v,) not in self.faces:
                raise ValueError(f"Vertex {v} is not a face")
        for f in self.faces:
            if not vertex_set.issuperset(f):
                raise ValueError(f"Face {list(f)} uses unknown vertices")
            for k in range(len(f)):
                sub = f[:k] + f[k + 1:]
                if sub not in self.faces:
                    raise ValueError(f"Face {list(f)} is missing its facet {list(sub)}")

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[int]],
                    vertices: Optional[Iterable[int]] = None) -> 'SimplicialComplex':
        """Close a list of facets under subsets."""
        faces = set()
        for facet in facets:
            facet = tuple(sorted(facet))
            for d in range(len(facet) + 1):
                faces.update(combinations(facet, d))
        if vertices is None:
            vertices = {v for f in faces for v in f}
        else:
            vertices = list(vertices)
            faces.update((v,) for v in vertices)
        return cls(vertices, faces)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def dim(self) -> int:
        """dim of the empty complex {∅} is -1."""
        return max(self._by_dim)

    def faces_of_dim(self, i: int) -> List[Face]:
        """Faces of dimension i in lexicographic order."""
        return list(self._by_dim.get(i, []))

    def facets(self) -> List[Face]:
        """Inclusion-maximal faces."""
        result = []
        for f in sorted(self.faces, key=lambda f: (len(f), f)):
            s = set(f)
            if not any(len(g) > len(f) and s.issubset(g) for g in self.faces):
                result.append(f)
        return result

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets()}) <= 1

    def f_vector(self) -> List[int]:
        """Face counts in dimensions -1..dim."""
        return [len(self._by_dim.get(i, [])) for i in range(-1, self.dim + 1)]

    def to_dict(self) -> Dict[str, Any]:
        return {'vertices': list(self.vertices), 'facets': [list(f) for f in self.facets()]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SimplicialComplex':
        return cls.from_facets(data.get('facets', []), data.get('vertices'))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.faces == other.faces

    def __hash__(self) -> int:
        return hash((self.vertices, self.faces))

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertices={self.vertex_count}, dim={self.dim})"
