"""The simplicial complex of a fan, links, and reduced (co)homology."""

import logging
from typing import Dict, List, Sequence

import numpy as np

from ..linalg.groups import direct_sum, power, subquotient
from ..linalg.matrices import identity, zeros
from ..models.complex import Face, SimplicialComplex
from ..models.errors import FaceNotInComplex
from ..models.fan import Fan
from ..models.group import AbelianGroup, INTEGERS

logger = logging.getLogger(__name__)


def complex_of_fan(fan: Fan) -> SimplicialComplex:
    """S_Δ: one vertex per ray, one face per cone (the zero cone is the empty face)."""
    return SimplicialComplex.from_facets(fan.max_cones, range(len(fan.rays)))


def link(cx: SimplicialComplex, face: Sequence[int]) -> SimplicialComplex:
    """lk σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ cx}, on the vertices it uses.

    Raises:
        FaceNotInComplex: face is not a face of cx
    """
    face = tuple(sorted(face))
    if face not in cx.faces:
        raise FaceNotInComplex(face)
    s = set(face)
    faces = [tuple(v for v in f if v not in s) for f in cx.faces if s.issubset(f)]
    vertices = {v for f in faces for v in f}
    return SimplicialComplex(vertices, faces)


def boundary_matrix(cx: SimplicialComplex, k: int) -> np.ndarray:
    """∂_k : C_k -> C_(k-1) of the augmented complex, C_(-1) = Z on the empty face.

    Defined for every k; outside -1..dim+1 one side is zero-dimensional.
    Faces are ordered lexicographically and a face loses its j-th vertex with
    sign (-1)^j.
    """
    rows = cx.faces_of_dim(k - 1) if k - 1 >= -1 else []
    cols = cx.faces_of_dim(k) if k >= -1 else []
    d = zeros(len(rows), len(cols))
    if not rows or not cols:
        return d
    position = {f: i for i, f in enumerate(rows)}
    for c, f in enumerate(cols):
        for j in range(len(f)):
            d[position[f[:j] + f[j + 1:]], c] = (-1) ** j
    return d


def chain_complex(cx: SimplicialComplex) -> Dict[int, np.ndarray]:
    """Differentials ∂_k for k = -1..dim+1, keyed by k."""
    return {k: boundary_matrix(cx, k) for k in range(-1, cx.dim + 2)}


def _relations(size: int, order: int) -> np.ndarray:
    """order * I, or no relations for order 0 (free coefficients)."""
    if order == 0:
        return zeros(size, 0)
    return order * identity(size)


def _graded(cx: SimplicialComplex, order: int, cohomology: bool) -> Dict[int, AbelianGroup]:
    """(Co)homology of the augmented complex tensored with Z/order (Z when order is 0)."""
    maps = chain_complex(cx)
    counts = {k: len(cx.faces_of_dim(k)) for k in range(-2, cx.dim + 2)}
    result: Dict[int, AbelianGroup] = {}
    for k in range(-1, cx.dim + 1):
        if cohomology:
            out_map, out_size = maps[k + 1].T, counts[k + 1]
            in_map = maps[k].T
        else:
            out_map, out_size = maps[k], counts[k - 1]
            in_map = maps[k + 1]
        result[k] = subquotient(out_map, _relations(out_size, order),
                                in_map, _relations(counts[k], order))
    return result


def reduced_homology(cx: SimplicialComplex, coefficients: AbelianGroup = INTEGERS,
                     cohomology: bool = False) -> Dict[int, AbelianGroup]:
    """Reduced homology H̃_i(cx, G), or cohomology H̃^i(cx, G), for i = -1..dim.

    G = Z^r + Z/d_1 + ... splits as a direct sum: the free part repeats the
    integral answer r times and each Z/d is computed from the complex
    presented with d·I relations in every degree.

    Returns:
        Dict degree -> group for every degree -1..dim (degrees outside are zero)
    """
    parts: List[Dict[int, AbelianGroup]] = []
    if coefficients.free_rank:
        integral = _graded(cx, 0, cohomology)
        parts.append({k: power(g, coefficients.free_rank) for k, g in integral.items()})
    for d in coefficients.torsion:
        parts.append(_graded(cx, d, cohomology))
    degrees = range(-1, cx.dim + 1)
    if not parts:
        return {k: AbelianGroup.zero() for k in degrees}
    return {k: direct_sum(*(p[k] for p in parts)) for k in degrees}


def reduced_cohomology(cx: SimplicialComplex,
                       coefficients: AbelianGroup = INTEGERS) -> Dict[int, AbelianGroup]:
    return reduced_homology(cx, coefficients, cohomology=True)


def homology_below_top(cx: SimplicialComplex) -> List[int]:
    """Degrees i < dim cx with H̃_i(cx, Z) != 0."""
    homology = reduced_homology(cx)
    return [i for i in range(-1, cx.dim) if not homology[i].is_zero()]


def minimal_nonfaces(cx: SimplicialComplex) -> List[Face]:
    """Inclusion-minimal vertex sets that are not faces (Stanley-Reisner generators)."""
    found = set()
    for f in cx.faces:
        for v in cx.vertices:
            if v in f:
                continue
            candidate = tuple(sorted(f + (v,)))
            if candidate in cx.faces or candidate in found:
                continue
            if all(candidate[:j] + candidate[j + 1:] in cx.faces for j in range(len(candidate))):
                found.add(candidate)
    return sorted(found, key=lambda f: (len(f), f))
