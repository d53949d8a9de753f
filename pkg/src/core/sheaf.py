"""Sections, flabbiness and cohomology of sheaves on a fan.

Two independent cohomology computations are offered: the closed formula for
simple sheaves through the orbit-closure fan, and the cochain complex of
strictly decreasing chains of cones, which works for any sheaf.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..linalg.groups import presentation, subquotient
from ..linalg.matrices import block_diagonal, identity, is_zero, matmul, solve_integer, vstack, zeros
from ..models.errors import ConeNotInFan
from ..models.fan import Cone, Fan
from ..models.group import ZERO, AbelianGroup
from ..models.sheaf import PosetSheaf
from .fans import orbit_closure_fan
from .simplicial import complex_of_fan, reduced_cohomology

logger = logging.getLogger(__name__)

Chain = Tuple[Cone, ...]


def _in_span(relations: np.ndarray, m: np.ndarray) -> bool:
    """Every column of m lies in the column span of relations."""
    if is_zero(m):
        return True
    if relations.shape[1] == 0:
        return False
    return solve_integer(relations, m) is not None


def validate_sheaf(sheaf: PosetSheaf) -> PosetSheaf:
    """Check that restrictions are well defined on the presented stalks and compose.

    Raises:
        ValueError: a restriction does not respect relations, or
            res(τ, υ) res(σ, τ) differs from res(σ, υ) in F_υ
    """
    fan = sheaf.fan
    for sigma in sheaf.poset.elements:
        for tau in sheaf.poset.boundary(sigma):
            r = sheaf.restriction(sigma, tau)
            if not _in_span(sheaf.relations(tau), matmul(r, sheaf.relations(sigma))):
                raise ValueError(
                    f"Restriction {fan.label(sigma)} -> {fan.label(tau)} does not respect relations"
                )
            for upsilon in sheaf.poset.boundary(tau):
                composite = matmul(sheaf.restriction(tau, upsilon), r)
                if not _in_span(sheaf.relations(upsilon), composite - sheaf.restriction(sigma, upsilon)):
                    raise ValueError(
                        f"Restrictions {fan.label(sigma)} -> {fan.label(tau)} -> {fan.label(upsilon)} "
                        f"do not compose"
                    )
    return sheaf


def constant_sheaf(fan: Fan, group: AbelianGroup) -> PosetSheaf:
    """Stalk G everywhere, identity restrictions."""
    relations = presentation(group)
    g = relations.shape[0]
    stalks = {cone: (g, relations) for cone in fan.all_cones}
    restrictions = {}
    for sigma in fan.all_cones:
        for tau in fan.all_cones:
            if set(tau) < set(sigma):
                restrictions[(sigma, tau)] = identity(g)
    return validate_sheaf(PosetSheaf(fan, stalks, restrictions, name=f"constant {group}"))


def simple_sheaf(fan: Fan, sigma: Sequence[int], group: AbelianGroup) -> PosetSheaf:
    """G(σ): stalk G at sigma, zero elsewhere.

    Raises:
        ConeNotInFan: sigma is not a cone of fan
    """
    sigma = tuple(sorted(sigma))
    if not fan.is_cone(sigma):
        raise ConeNotInFan([fan.rays[i] for i in sigma if 0 <= i < len(fan.rays)])
    relations = presentation(group)
    g = relations.shape[0]
    stalks = {cone: (g, relations) if cone == sigma else (0, zeros(0, 0)) for cone in fan.all_cones}
    restrictions = {}
    for upper in fan.all_cones:
        for lower in fan.all_cones:
            if set(lower) < set(upper):
                restrictions[(upper, lower)] = zeros(stalks[lower][0], stalks[upper][0])
    return PosetSheaf(fan, stalks, restrictions, name=f"{group}({fan.label(sigma)})")


def zero_sheaf(fan: Fan) -> PosetSheaf:
    return constant_sheaf(fan, ZERO)


def _equalizer(sheaf: PosetSheaf, maximal: Sequence[Cone]):
    """Difference map ⊕_M F_M -> ⊕_{M<M'} F_(M∩M') and both relation blocks."""
    offsets = []
    b = 0
    for cone in maximal:
        offsets.append(b)
        b += sheaf.generators(cone)
    source_relations = block_diagonal([sheaf.relations(c) for c in maximal]) if maximal else zeros(0, 0)

    rows = []
    target_blocks = []
    for (i, left), (j, right) in combinations(enumerate(maximal), 2):
        meet = tuple(sorted(set(left) & set(right)))
        block = zeros(sheaf.generators(meet), b)
        block[:, offsets[i]:offsets[i] + sheaf.generators(left)] = sheaf.restriction(left, meet)
        block[:, offsets[j]:offsets[j] + sheaf.generators(right)] -= sheaf.restriction(right, meet)
        rows.append(block)
        target_blocks.append(sheaf.relations(meet))
    difference = vstack(rows, b)
    target_relations = block_diagonal(target_blocks) if target_blocks else zeros(0, 0)
    return difference, target_relations, source_relations


def sections(sheaf: PosetSheaf, cones: Sequence[Sequence[int]]) -> AbelianGroup:
    """F(U) for an open set U: families over the maximal cones of U agreeing on pairwise meets.

    Raises:
        NotOpen: U is not closed under faces
    """
    members = sheaf.poset.require_open(cones)
    maximal = sheaf.poset.generating_cones(members)
    if not maximal:
        return ZERO
    difference, target_relations, source_relations = _equalizer(sheaf, maximal)
    b = difference.shape[1]
    return subquotient(difference, target_relations, zeros(b, 0), source_relations)


def global_sections(sheaf: PosetSheaf) -> AbelianGroup:
    return sections(sheaf, sheaf.fan.all_cones)


def is_flabby(sheaf: PosetSheaf) -> Tuple[bool, Optional[Cone]]:
    """Whether F_σ -> F(∂σ) is onto for every cone σ.

    Returns:
        (True, None), or (False, first offending cone in cone order)
    """
    for sigma in sheaf.poset.elements:
        if not sigma:
            continue
        facets = sheaf.poset.generating_cones(sheaf.poset.boundary(sigma))
        difference, target_relations, source_relations = _equalizer(sheaf, facets)
        image = vstack([sheaf.restriction(sigma, facet) for facet in facets], sheaf.generators(sigma))
        cokernel = subquotient(difference, target_relations, image, source_relations)
        if not cokernel.is_zero():
            logger.debug(f"{sheaf!r} is not flabby at {sheaf.fan.label(sigma)}: cokernel {cokernel}")
            return False, sigma
    return True, None


def _chains(sheaf: PosetSheaf, top: int) -> Dict[int, List[Chain]]:
    """Strictly decreasing chains of cones with nonzero end stalk, by length - 1."""
    fan = sheaf.fan
    faces = {c: [d for d in fan.all_cones if set(d) < set(c)] for c in fan.all_cones}
    by_degree: Dict[int, List[Chain]] = {p: [] for p in range(top + 2)}

    def extend(chain: Chain) -> None:
        if sheaf.generators(chain[-1]) > 0:
            by_degree[len(chain) - 1].append(chain)
        for face in faces[chain[-1]]:
            extend(chain + (face,))

    for cone in fan.all_cones:
        extend((cone,))
    for p in by_degree:
        by_degree[p].sort(key=lambda chain: [(len(c), c) for c in chain])
    return by_degree


def poset_sheaf_cohomology(sheaf: PosetSheaf) -> List[AbelianGroup]:
    """H^p(Δ, F) for p = 0..max cone dim from the complex of chains.

    C^p is the product of F(x_p) over chains x_0 ⊋ x_1 ⊋ ... ⊋ x_p and

        (δc)(y) = Σ_{j<=p} (-1)^j c(y without y_j) + (-1)^(p+1) res(y_p, y_(p+1)) c(y_0..y_p)
    """
    top = sheaf.fan.max_dim()
    chains = _chains(sheaf, top)

    layout = {}
    relations = {}
    for p, items in chains.items():
        offsets = {}
        size = 0
        for chain in items:
            offsets[chain] = size
            size += sheaf.generators(chain[-1])
        layout[p] = (offsets, size)
        relations[p] = (block_diagonal([sheaf.relations(c[-1]) for c in items])
                        if items else zeros(0, 0))

    def coboundary(p: int) -> np.ndarray:
        source_offsets, source_size = layout[p]
        target_offsets, target_size = layout[p + 1]
        d = zeros(target_size, source_size)
        for y, row in target_offsets.items():
            g = sheaf.generators(y[-1])
            for j in range(p + 1):
                sub = y[:j] + y[j + 1:]
                if sub in source_offsets:
                    col = source_offsets[sub]
                    d[row:row + g, col:col + g] += ((-1) ** j) * identity(g)
            head = y[:p + 1]
            if head in source_offsets:
                col = source_offsets[head]
                res = sheaf.restriction(y[p], y[p + 1])
                d[row:row + g, col:col + res.shape[1]] += ((-1) ** (p + 1)) * res
        return d

    result = []
    incoming = zeros(layout[0][1], 0)
    for p in range(top + 1):
        outgoing = coboundary(p)
        result.append(subquotient(outgoing, relations[p + 1], incoming, relations[p]))
        incoming = outgoing
    logger.debug(f"bar complex of {sheaf!r}: {[len(chains[p]) for p in sorted(chains)]} chains")
    return result


def simple_sheaf_cohomology(fan: Fan, sigma: Sequence[int], group: AbelianGroup) -> List[AbelianGroup]:
    """H^i(Δ, G(σ)) for i = 0..max cone dim.

    H^0 is G when sigma is maximal and 0 otherwise; for i >= 1 it is the
    reduced cohomology H̃^(i-1) of the complex of the orbit-closure fan of
    sigma with coefficients G.

    Raises:
        ConeNotInFan: sigma is not a cone of fan
    """
    sigma = tuple(sorted(sigma))
    if not fan.is_cone(sigma):
        raise ConeNotInFan([fan.rays[i] for i in sigma if 0 <= i < len(fan.rays)])
    length = fan.max_dim() + 1
    closure = orbit_closure_fan(fan, sigma)
    cohomology = reduced_cohomology(complex_of_fan(closure), group)
    result = [group if fan.is_maximal(sigma) else ZERO]
    for i in range(1, length):
        result.append(cohomology.get(i - 1, ZERO))
    return result
