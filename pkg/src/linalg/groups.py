"""Finitely generated abelian groups from presentations and chain complexes."""

import re
from math import gcd
from typing import Iterable, List, Tuple

import numpy as np

from ..models.errors import CompositionNonzero, DimensionMismatch
from ..models.group import AbelianGroup
from .matrices import (
    hstack,
    image_basis,
    is_zero,
    kernel_basis,
    matmul,
    smith_diagonal,
    solve_integer,
    zeros,
)


def group_from_relations(relations: np.ndarray) -> AbelianGroup:
    """Z^g / (column span of relations), g = number of rows."""
    g = relations.shape[0]
    if relations.shape[1] == 0:
        return AbelianGroup.free(g)
    diag = smith_diagonal(relations)
    nonzero = [d for d in diag if d != 0]
    return AbelianGroup(g - len(nonzero), [d for d in nonzero if d != 1])


def group_from_orders(free_rank: int, orders: Iterable[int]) -> AbelianGroup:
    """Z^free_rank + sum of Z/d, normalized through the Smith form of the diagonal.

    Orders 1 are dropped, order 0 counts as a copy of Z.
    """
    orders = [abs(int(d)) for d in orders]
    free_rank += sum(1 for d in orders if d == 0)
    orders = [d for d in orders if d > 1]
    if not orders:
        return AbelianGroup.free(free_rank)
    stack = zeros(len(orders), len(orders))
    for i, d in enumerate(orders):
        stack[i, i] = d
    torsion = [d for d in smith_diagonal(stack) if d > 1]
    return AbelianGroup(free_rank, torsion)


def direct_sum(*groups: AbelianGroup) -> AbelianGroup:
    free = sum(g.free_rank for g in groups)
    orders = [d for g in groups for d in g.torsion]
    return group_from_orders(free, orders)


def power(group: AbelianGroup, k: int) -> AbelianGroup:
    """Direct sum of k copies of group."""
    if k <= 0:
        return AbelianGroup.zero()
    return direct_sum(*([group] * k))


def presentation(group: AbelianGroup) -> np.ndarray:
    """Relation matrix whose cokernel is group (one generator per invariant)."""
    g = group.generator_count()
    rel = zeros(g, len(group.torsion))
    for k, d in enumerate(group.torsion):
        rel[group.free_rank + k, k] = d
    return rel


def subquotient(cycles_map: np.ndarray, target_relations: np.ndarray,
                boundary_map: np.ndarray, source_relations: np.ndarray) -> AbelianGroup:
    """Homology of presented groups A -> B -> C at B.

    With B = Z^b / im(source_relations) and C = Z^c / im(target_relations),
    returns {x in Z^b : cycles_map x in im target_relations} modulo
    im(boundary_map) + im(source_relations).

    Args:
        cycles_map: c x b matrix of the outgoing map on generators
        target_relations: c x r matrix of relations of C
        boundary_map: b x a matrix of the incoming map on generators
        source_relations: b x s matrix of relations of B

    Returns:
        Invariants of the subquotient
    """
    b = cycles_map.shape[1]
    if boundary_map.shape[0] != b or source_relations.shape[0] != b:
        raise DimensionMismatch(cycles_map.shape, boundary_map.shape)
    if target_relations.shape[0] != cycles_map.shape[0]:
        raise DimensionMismatch(target_relations.shape, cycles_map.shape)

    stacked = hstack([cycles_map, target_relations], cycles_map.shape[0])
    if stacked.shape[1] == 0 or is_zero(cycles_map):
        cycles = None
    else:
        kernel = kernel_basis(stacked)
        cycles = image_basis(kernel[:b])

    boundaries = hstack([boundary_map, source_relations], b)
    if cycles is None:
        return group_from_relations(boundaries)
    coords = solve_integer(cycles, boundaries)
    if coords is None:
        raise CompositionNonzero()
    return group_from_relations(coords)


def homology_at(d_out: np.ndarray, d_in: np.ndarray) -> AbelianGroup:
    """ker(d_out) / im(d_in) as invariants.

    d_in is rewritten in a basis of ker(d_out) and the Smith form of the
    result is read off.

    Raises:
        DimensionMismatch: d_out's column count differs from d_in's row count
        CompositionNonzero: d_out @ d_in is not zero
    """
    if d_out.shape[1] != d_in.shape[0]:
        raise DimensionMismatch(d_out.shape, d_in.shape)
    if not is_zero(matmul(d_out, d_in)):
        raise CompositionNonzero()
    n = d_out.shape[1]
    return subquotient(d_out, zeros(d_out.shape[0], 0), d_in, zeros(n, 0))


def tensor_and_tor1(g: AbelianGroup, h: AbelianGroup) -> Tuple[AbelianGroup, AbelianGroup]:
    """(g ⊗ h, Tor_1(g, h)) by bilinearity over the cyclic summands."""
    free = g.free_rank * h.free_rank
    tensor_orders: List[int] = []
    tor_orders: List[int] = []
    tensor_orders.extend(list(h.torsion) * g.free_rank)
    tensor_orders.extend(list(g.torsion) * h.free_rank)
    for a in g.torsion:
        for b in h.torsion:
            tensor_orders.append(gcd(a, b))
            tor_orders.append(gcd(a, b))
    return group_from_orders(free, tensor_orders), group_from_orders(0, tor_orders)


_TERM = re.compile(r'^Z(?:\^(\d+))?$|^Z/(\d+)(?:\^(\d+))?$|^\(Z/(\d+)\)\^(\d+)$')


def parse_group(text: str) -> AbelianGroup:
    """Parse the canonical rendering back into a group.

    Accepts "0", "Z", "Z^2", "Z/3", "Z/3^2" or "(Z/3)^2" terms joined by "+".
    """
    text = text.strip()
    if text == '0':
        return AbelianGroup.zero()
    free = 0
    orders: List[int] = []
    for term in text.split('+'):
        term = term.replace(' ', '')
        match = _TERM.match(term)
        if match is None:
            raise ValueError(f"Cannot parse group term: {term!r}")
        free_exp, order, order_exp, paren_order, paren_exp = match.groups()
        if order is None and paren_order is None:
            free += int(free_exp) if free_exp else 1
        elif order is not None:
            orders.extend([int(order)] * (int(order_exp) if order_exp else 1))
        else:
            orders.extend([int(paren_order)] * int(paren_exp))
    if any(d == 0 for d in orders):
        raise ValueError("Z/0 is not a valid term; write Z")
    return group_from_orders(free, orders)