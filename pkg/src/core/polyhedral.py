"""Exact computations with rational polyhedral cones.

Descriptions are converted with the double description method on integer
vectors. Rays are kept orthogonal to the lineality space so that a cone has
one canonical set of primitive extreme rays.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..linalg.matrices import (
    hermite_normal_form,
    identity,
    int_matrix,
    is_zero,
    kernel_basis,
    rank,
    solve_integer,
)
from ..models.cone import RationalCone, Vector, primitive
from ..models.errors import RankMismatch, SearchBudgetExceeded
from ..models.fan import Cone, Fan

logger = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 200000


def _dot(a: Sequence[int], x: Sequence[int]) -> int:
    return sum(int(p) * int(q) for p, q in zip(a, x))


def _rank(vectors: Sequence[Sequence[int]]) -> int:
    if not vectors:
        return 0
    return rank(int_matrix(vectors))


def _solve_fractions(matrix: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    """Solve a square nonsingular rational system."""
    k = len(rhs)
    rows = [list(matrix[i]) + [rhs[i]] for i in range(k)]
    for c in range(k):
        pivot = next(i for i in range(c, k) if rows[i][c] != 0)
        rows[c], rows[pivot] = rows[pivot], rows[c]
        for i in range(k):
            if i != c and rows[i][c] != 0:
                f = rows[i][c] / rows[c][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return [rows[i][k] / rows[i][i] for i in range(k)]


def _project_out(v: Sequence[int], basis: Sequence[Sequence[int]]) -> Vector:
    """Primitive integer multiple of the orthogonal projection of v onto basis^perp."""
    if not basis:
        return primitive(v)
    gram = [[Fraction(_dot(b, c)) for c in basis] for b in basis]
    coeffs = _solve_fractions(gram, [Fraction(_dot(b, v)) for b in basis])
    w = [Fraction(int(x)) for x in v]
    for c, b in zip(coeffs, basis):
        w = [x - c * y for x, y in zip(w, b)]
    scale = 1
    for x in w:
        scale = lcm(scale, x.denominator)
    return primitive([int(x * scale) for x in w])


def _reduce_rays(rays: List[Vector], lineality: List[Vector],
                 processed: List[Vector], n: int) -> List[Vector]:
    """Project rays off the lineality space and keep the extreme ones."""
    target = n - len(lineality) - 1
    kept: List[Vector] = []
    for r in rays:
        p = _project_out(r, lineality)
        if not any(p) or p in kept:
            continue
        tight = [a for a in processed if _dot(a, p) == 0]
        if _rank(tight) == target:
            kept.append(p)
    return sorted(kept)


def _double_description(inequalities: Sequence[Sequence[int]], n: int) -> Tuple[List[Vector], List[Vector]]:
    """Extreme rays and a lineality basis of {x : <a, x> >= 0 for all a}."""
    lineality: List[Vector] = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        lineality.append(tuple(e))
    rays: List[Vector] = []
    processed: List[Vector] = []

    for a in inequalities:
        a = primitive(a)
        if not any(a):
            continue
        processed.append(a)
        moving = [i for i, l in enumerate(lineality) if _dot(a, l) != 0]
        if moving:
            i0 = moving[0]
            l0 = lineality[i0]
            if _dot(a, l0) < 0:
                l0 = tuple(-x for x in l0)
            a0 = _dot(a, l0)
            new_lineality = []
            for i, l in enumerate(lineality):
                if i == i0:
                    continue
                al = _dot(a, l)
                v = primitive([a0 * x - al * y for x, y in zip(l, l0)])
                if any(v):
                    new_lineality.append(v)
            new_rays = []
            for r in rays:
                ar = _dot(a, r)
                new_rays.append(primitive([a0 * x - ar * y for x, y in zip(r, l0)]))
            new_rays.append(l0)
            lineality = new_lineality
            rays = new_rays
        else:
            positive = [r for r in rays if _dot(a, r) > 0]
            negative = [r for r in rays if _dot(a, r) < 0]
            new_rays = [r for r in rays if _dot(a, r) >= 0]
            for p in positive:
                ap = _dot(a, p)
                for q in negative:
                    aq = _dot(a, q)
                    new_rays.append(primitive([ap * x - aq * y for x, y in zip(q, p)]))
            rays = new_rays
        rays = _reduce_rays(rays, lineality, processed, n)

    return rays, sorted(lineality)


def _with_pairs(rays: Sequence[Vector], lineality: Sequence[Vector]) -> List[Vector]:
    out = list(rays)
    for l in lineality:
        out.append(tuple(l))
        out.append(tuple(-x for x in l))
    return out


def _inequalities_of(c: RationalCone) -> List[Vector]:
    if c.inequalities is not None:
        return c.inequalities
    dual_rays, dual_lineality = _double_description(c.generators, c.n)
    return _with_pairs(dual_rays, dual_lineality)


def _generators_of(c: RationalCone) -> List[Vector]:
    if c.generators is not None:
        return c.generators
    rays, lineality = _double_description(_inequalities_of(c), c.n)
    return _with_pairs(rays, lineality)


def dual_description(c: RationalCone) -> RationalCone:
    """Cone with both descriptions populated and irredundant."""
    inequalities = _inequalities_of(c)
    rays, lineality = _double_description(inequalities, c.n)
    generators = _with_pairs(rays, lineality)
    dual_rays, dual_lineality = _double_description(generators, c.n)
    return RationalCone(c.n, generators, _with_pairs(dual_rays, dual_lineality))


def _canonical_lineality(lineality: Sequence[Vector], n: int) -> Tuple[Vector, ...]:
    """Hermite basis of the saturated lattice spanned by the lineality space."""
    if not lineality:
        return ()
    perp = kernel_basis(int_matrix(lineality))
    saturated = kernel_basis(perp.T) if perp.shape[1] > 0 else identity(n)
    H, _ = hermite_normal_form(saturated.T)
    return tuple(tuple(int(x) for x in row) for row in H if not is_zero(row))


def canonical_form(c: RationalCone) -> Tuple[Tuple[Vector, ...], Tuple[Vector, ...]]:
    """(sorted primitive extreme rays, canonical lineality basis)."""
    rays, lineality = _double_description(_inequalities_of(c), c.n)
    return tuple(sorted(rays)), _canonical_lineality(lineality, c.n)


def cone_equal(a: RationalCone, b: RationalCone) -> bool:
    if a.n != b.n:
        raise RankMismatch([a.n, b.n])
    return canonical_form(a) == canonical_form(b)


def contains(c: RationalCone, v: Sequence[int]) -> bool:
    return all(_dot(a, v) >= 0 for a in _inequalities_of(c))


def is_subcone(a: RationalCone, b: RationalCone) -> bool:
    """a ⊆ b."""
    inequalities = _inequalities_of(b)
    return all(_dot(h, g) >= 0 for g in _generators_of(a) for h in inequalities)


def intersect(cones: Sequence[RationalCone], n: Optional[int] = None) -> RationalCone:
    """Intersection of cones; the empty intersection is the full space of rank n."""
    ranks = [c.n for c in cones]
    if n is not None:
        ranks.append(n)
    if not ranks:
        raise ValueError("The ambient rank of an empty intersection must be given")
    if len(set(ranks)) > 1:
        raise RankMismatch(ranks)
    inequalities: List[Vector] = []
    for c in cones:
        inequalities.extend(_inequalities_of(c))
    return dual_description(RationalCone(ranks[0], inequalities=inequalities))


def is_full_dimensional(c: RationalCone) -> bool:
    """Nonempty interior, i.e. the generators span Q^n."""
    return _rank(_generators_of(c)) == c.n


def interior_point(c: RationalCone) -> Vector:
    """Sum of the extreme rays: a relative interior point."""
    rays, _ = _double_description(_inequalities_of(c), c.n)
    point = [0] * c.n
    for r in rays:
        point = [x + y for x, y in zip(point, r)]
    return tuple(point)


def pos_cone(fan: Fan, sigma: Cone) -> RationalCone:
    """The cone spanned by the rays of sigma."""
    return RationalCone(fan.n, generators=fan.vectors(sigma))


def _dual_basis(fan: Fan, sigma: Cone) -> Dict[int, Vector]:
    """u_i with <u_i, v_j> = δ_ij for the rays v_j of a full-dimensional regular cone."""
    generators = int_matrix(fan.vectors(sigma))
    inverse = solve_integer(generators, identity(fan.n))
    return {ray: tuple(int(x) for x in inverse[:, k]) for k, ray in enumerate(sigma)}


def enough_limits(fan: Fan, max_nodes: Optional[int] = DEFAULT_MAX_NODES) -> Tuple[bool, Dict[str, Any]]:
    """Decide whether the intersection over τ of the unions of σ + <τ> has interior.

    Only full-dimensional maximal cones in st τ matter: the other terms have
    empty interior and the union of finitely many closed sets has interior
    only if one of them does. So the search runs over choice functions
    τ ↦ σ(τ) among those, with σ(τ) + <τ> = {x : <u_i, x> >= 0, i ∈ σ(τ) ∖ τ}
    in the dual basis u of σ(τ).

    Returns:
        (True, certificate with the witness choice and an interior point) or
        (False, certificate describing the exhausted search)

    Raises:
        SearchBudgetExceeded: more than max_nodes search nodes were visited
    """
    n = fan.n
    duals = {sigma: _dual_basis(fan, sigma) for sigma in fan.full_dimensional_cones()}
    order = sorted(fan.all_cones, key=lambda t: (-len(fan.star(t)), len(t), t))

    options: Dict[Cone, List[Tuple[Cone, List[Vector]]]] = {}
    for tau in order:
        choices = []
        for sigma in fan.max_star(tau):
            if sigma in duals:
                choices.append((sigma, [duals[sigma][i] for i in sigma if i not in tau]))
        if not choices:
            logger.info(f"enough_limits: no full-dimensional cone contains {fan.label(tau)}")
            return False, {
                'exhausted': True,
                'nodes': 0,
                'blocking_cone': fan.label(tau),
            }
        options[tau] = choices

    choice: Dict[Cone, Cone] = {}
    nodes = 0
    full_space = RationalCone.full_space(n)
    final: List[RationalCone] = []

    def search(k: int, inequalities: List[Vector], generators: List[Vector]) -> bool:
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise SearchBudgetExceeded(max_nodes)
        if k == len(order):
            final.append(RationalCone(n, generators, inequalities))
            return True
        tau = order[k]
        for sigma, term in options[tau]:
            if all(_dot(a, g) >= 0 for a in term for g in generators):
                choice[tau] = sigma
                if search(k + 1, inequalities, generators):
                    return True
                del choice[tau]
                return False
        for sigma, term in options[tau]:
            merged = inequalities + [a for a in term if a not in inequalities]
            rays, lineality = _double_description(merged, n)
            candidate = _with_pairs(rays, lineality)
            if _rank(candidate) < n:
                continue
            choice[tau] = sigma
            if search(k + 1, merged, candidate):
                return True
            del choice[tau]
        return False

    found = search(0, [], list(full_space.generators))
    logger.debug(f"enough_limits: {nodes} nodes visited on {fan!r}")
    if not found:
        return False, {'exhausted': True, 'nodes': nodes}
    witness = {fan.label(tau): fan.label(choice[tau]) for tau in fan.all_cones}
    return True, {
        'nodes': nodes,
        'choice': witness,
        'interior_point': list(interior_point(final[0])),
    }
