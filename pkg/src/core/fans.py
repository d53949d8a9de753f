"""Fan validation, star subdivisions, orbit-closure fans and completeness."""

import logging
from collections import Counter
from itertools import combinations
from math import gcd
from typing import List, Optional, Sequence, Tuple

from ..linalg.matrices import hermite_normal_form, int_matrix, rank, smith_diagonal, smith_normal_form
from ..models.cone import primitive
from ..models.errors import (
    BadIntersection,
    ConeNotInFan,
    DependentGenerators,
    DimensionTooSmall,
    DuplicateRay,
    IndexOutOfRange,
    NonPrimitiveRay,
    NotRegular,
)
from ..models.fan import Cone, Fan, FanData
from .polyhedral import cone_equal, intersect, pos_cone

logger = logging.getLogger(__name__)


def validate_fan(raw: FanData) -> Fan:
    """Validate raw fan data and return a Fan.

    Rays are sorted lexicographically and cones re-indexed. Rays used by no
    cone become one-dimensional maximal cones; listed cones contained in
    other listed cones are dropped.

    Args:
        raw: Rays and maximal cones by index

    Returns:
        Validated fan

    Raises:
        NonPrimitiveRay, DuplicateRay, IndexOutOfRange, DependentGenerators,
        NotRegular, BadIntersection
    """
    n = raw.dim
    seen = set()
    for i, ray in enumerate(raw.rays):
        g = 0
        for x in ray:
            g = gcd(g, int(x))
        if g != 1:
            raise NonPrimitiveRay(i, ray)
        key = tuple(int(x) for x in ray)
        if key in seen:
            raise DuplicateRay(key)
        seen.add(key)
    for position, cone in enumerate(raw.cones):
        for index in cone:
            if not isinstance(index, int) or not 0 <= index < len(raw.rays):
                raise IndexOutOfRange(position, index, len(raw.rays))

    order = sorted(range(len(raw.rays)), key=lambda i: tuple(raw.rays[i]))
    new_index = {old: new for new, old in enumerate(order)}
    rays = [tuple(int(x) for x in raw.rays[i]) for i in order]
    cones = {tuple(sorted({new_index[i] for i in cone})) for cone in raw.cones}
    used = {i for cone in cones for i in cone}
    cones.update((i,) for i in range(len(rays)) if i not in used)
    if not cones:
        cones = {()}
    maximal = sorted(c for c in cones if not any(set(c) < set(d) for d in cones))

    fan = Fan(n, rays, maximal, raw.name)
    for sigma in maximal:
        if not sigma:
            continue
        vectors = fan.vectors(sigma)
        generators = int_matrix(vectors)
        if rank(generators) < len(sigma):
            raise DependentGenerators(vectors)
        diagonal = smith_diagonal(generators)
        if any(d != 1 for d in diagonal):
            raise NotRegular(vectors, diagonal)

    for sigma, tau in combinations(maximal, 2):
        common = tuple(sorted(set(sigma) & set(tau)))
        meet = intersect([pos_cone(fan, sigma), pos_cone(fan, tau)])
        if not cone_equal(meet, pos_cone(fan, common)):
            raise BadIntersection(fan.vectors(sigma), fan.vectors(tau))

    logger.debug(f"validated {fan!r}")
    return fan


def _require_cone(fan: Fan, sigma: Sequence[int]) -> Cone:
    sigma = tuple(sorted(sigma))
    if not fan.is_cone(sigma):
        labels = [fan.rays[i] if 0 <= i < len(fan.rays) else (i,) for i in sigma]
        raise ConeNotInFan(labels)
    return sigma


def star_subdivision(fan: Fan, sigma: Sequence[int]) -> Fan:
    """Star subdivision of fan at sigma (the fan of the blow-up along V(sigma)).

    Every maximal cone M containing sigma is replaced by the cones
    (M ∖ {v}) ∪ {ρ_σ}, v ∈ sigma, where ρ_σ is the sum of sigma's rays.

    Raises:
        ConeNotInFan: sigma is not a cone of fan
        DimensionTooSmall: sigma is the zero cone
    """
    sigma = _require_cone(fan, sigma)
    if len(sigma) == 0:
        raise DimensionTooSmall([], 1)
    if len(sigma) == 1:
        return fan

    new_ray = tuple(sum(fan.rays[i][k] for i in sigma) for k in range(fan.n))
    q = len(fan.rays)
    rays = [list(r) for r in fan.rays] + [list(new_ray)]
    cones: List[Tuple[int, ...]] = []
    s = set(sigma)
    for cone in fan.max_cones:
        if s.issubset(cone):
            for v in sigma:
                cones.append(tuple(sorted((set(cone) - {v}) | {q})))
        else:
            cones.append(cone)

    logger.debug(f"star subdivision at {fan.label(sigma)} adds ray {list(new_ray)}")
    return validate_fan(FanData(fan.n, rays, cones, fan.name))


def quotient_map(fan: Fan, sigma: Sequence[int]):
    """Integer matrix of a surjection Z^n -> Z^(n-d) whose kernel is N_sigma.

    The generators of sigma are completed to a lattice basis through the
    Smith form, and the resulting rows are put in Hermite normal form.
    """
    sigma = _require_cone(fan, sigma)
    d = len(sigma)
    if d == 0:
        projection = int_matrix([[1 if i == j else 0 for j in range(fan.n)] for i in range(fan.n)],
                                fan.n, fan.n)
    else:
        snf = smith_normal_form(int_matrix(fan.vectors(sigma)))
        projection = snf.V[:, d:].T
    H, _ = hermite_normal_form(projection)
    return H


def orbit_closure_fan(fan: Fan, sigma: Sequence[int]) -> Fan:
    """Fan of the orbit closure V(sigma): st sigma projected to N / N_sigma.

    Raises:
        ConeNotInFan: sigma is not a cone of fan
    """
    sigma = _require_cone(fan, sigma)
    if not sigma:
        return fan
    projection = quotient_map(fan, sigma)
    rank_out = fan.n - len(sigma)

    rays: List[Tuple[int, ...]] = []
    index = {}
    cones = []
    for cone in fan.max_star(sigma):
        projected = []
        for i in cone:
            if i in sigma:
                continue
            v = fan.rays[i]
            image = primitive([sum(projection[r, k] * v[k] for k in range(fan.n))
                               for r in range(rank_out)])
            if image not in index:
                index[image] = len(rays)
                rays.append(image)
            projected.append(index[image])
        cones.append(projected)

    name = f"{fan.name or 'fan'} / {fan.label(sigma)}"
    return validate_fan(FanData(rank_out, [list(r) for r in rays], cones, name))


def is_complete(fan: Fan) -> bool:
    """|Δ| = R^n: pure of dimension n and every (n-1)-cone bounds exactly two maximal cones."""
    if not fan.is_pure():
        return False
    if fan.n == 0:
        return True
    counts: Counter = Counter()
    for cone in fan.max_cones:
        for ridge in combinations(cone, fan.n - 1):
            counts[ridge] += 1
    return all(counts[ridge] == 2 for ridge in fan.cones_of_dim(fan.n - 1))


def fan_from_dict(data: dict, name: Optional[str] = None) -> Fan:
    """Validate a fan file record."""
    raw = FanData.from_dict(data)
    if name is not None:
        raw.name = name
    return validate_fan(raw)
