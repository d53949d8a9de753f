"""Sheaves of finitely generated abelian groups on the poset of a fan."""

from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import ConeNotInFan, NotOpen
from .fan import Cone, Fan

# (generator count, relation matrix with one row per generator)
Stalk = Tuple[int, np.ndarray]


class FanPoset:
    """Cones of a fan ordered by σ <= τ iff τ is a face of σ.

    The zero cone is the maximum. Open sets are the subfans, i.e. the
    face-closed sets of cones.
    """

    def __init__(self, fan: Fan):
        self.fan = fan
        self.elements: Tuple[Cone, ...] = fan.all_cones

    def leq(self, sigma: Cone, tau: Cone) -> bool:
        return set(tau).issubset(sigma)

    def missing_face(self, cones: Iterable[Sequence[int]]) -> Optional[Cone]:
        """A face of some cone in cones that is absent from cones, or None."""
        members = {tuple(sorted(c)) for c in cones}
        for cone in sorted(members, key=lambda c: (len(c), c)):
            if not self.fan.is_cone(cone):
                raise ConeNotInFan([self.fan.rays[i] for i in cone if 0 <= i < len(self.fan.rays)])
            for j in range(len(cone)):
                facet = cone[:j] + cone[j + 1:]
                if facet not in members:
                    return facet
        return None

    def is_open(self, cones: Iterable[Sequence[int]]) -> bool:
        return self.missing_face(cones) is None

    def require_open(self, cones: Iterable[Sequence[int]]) -> List[Cone]:
        """Sorted members of an open set.

        Raises:
            NotOpen: a face of a member is missing
        """
        members = sorted({tuple(sorted(c)) for c in cones}, key=lambda c: (len(c), c))
        missing = self.missing_face(members)
        if missing is not None:
            raise NotOpen(missing)
        return members

    def boundary(self, sigma: Cone) -> List[Cone]:
        """∂σ: the proper faces of sigma."""
        s = set(sigma)
        return [c for c in self.elements if set(c) < s]

    def generating_cones(self, cones: Sequence[Cone]) -> List[Cone]:
        """Inclusion-maximal members (the minimal elements of the poset order)."""
        return [c for c in cones if not any(set(c) < set(d) for d in cones)]


class PosetSheaf:
    """Stalk presentations per cone and restriction matrices per face pair.

    stalks[σ] = (g, R) presents F_σ = Z^g / im R. restrictions[(σ, τ)] for τ a
    proper face of σ is a g_τ x g_σ integer matrix inducing F_σ -> F_τ; the
    restriction of a cone to itself is the identity and is not stored.
    Functoriality and well-definedness are checked by
    src.core.sheaf.validate_sheaf.
    """

    def __init__(self, fan: Fan, stalks: Dict[Cone, Stalk],
                 restrictions: Dict[Tuple[Cone, Cone], np.ndarray], name: str = ''):
        self.fan = fan
        self.poset = FanPoset(fan)
        self.stalks = dict(stalks)
        self.restrictions = dict(restrictions)
        self.name = name
        self._validate()

    def _validate(self) -> None:
        """Validate shapes."""
        for cone in self.poset.elements:
            if cone not in self.stalks:
                raise ValueError(f"No stalk at cone {self.fan.label(cone)}")
            g, relations = self.stalks[cone]
            if relations.shape[0] != g:
                raise ValueError(
                    f"Stalk at {self.fan.label(cone)} has {g} generators but "
                    f"{relations.shape[0]} relation rows"
                )
        for sigma in self.poset.elements:
            for tau in self.poset.boundary(sigma):
                if (sigma, tau) not in self.restrictions:
                    raise ValueError(
                        f"Missing restriction {self.fan.label(sigma)} -> {self.fan.label(tau)}"
                    )
                shape = self.restrictions[(sigma, tau)].shape
                expected = (self.stalks[tau][0], self.stalks[sigma][0])
                if shape != expected:
                    raise ValueError(
                        f"Restriction {self.fan.label(sigma)} -> {self.fan.label(tau)} has shape "
                        f"{shape}, expected {expected}"
                    )

    def generators(self, cone: Cone) -> int:
        return self.stalks[cone][0]

    def relations(self, cone: Cone) -> np.ndarray:
        return self.stalks[cone][1]

    def restriction(self, sigma: Cone, tau: Cone) -> np.ndarray:
        """Matrix of F_σ -> F_τ for tau a face of sigma."""
        if sigma == tau:
            g = self.generators(sigma)
            m = np.zeros((g, g), dtype=object)
            for i in range(g):
                m[i, i] = 1
            return m
        return self.restrictions[(sigma, tau)]

    def to_dict(self) -> Dict[str, Any]:
        """Stalk presentations and restrictions keyed by cone labels."""
        label = self.fan.label
        return {
            'name': self.name,
            'stalks': {
                label(c): {'generators': g, 'relations': [[int(x) for x in row] for row in r]}
                for c, (g, r) in self.stalks.items()
            },
            'restrictions': {
                f"{label(s)} -> {label(t)}": [[int(x) for x in row] for row in m]
                for (s, t), m in sorted(self.restrictions.items(), key=lambda item: item[0])
            },
        }

    def __repr__(self) -> str:
        return f"PosetSheaf({self.name or 'unnamed'}, cones={len(self.stalks)})"
