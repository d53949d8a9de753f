"""Exact integer linear algebra for Tor-o-matic."""

from .matrices import (
    SmithForm,
    int_matrix,
    zeros,
    identity,
    matmul,
    smith_normal_form,
    hermite_normal_form,
    kernel_basis,
    solve_integer,
    rank,
    is_unimodular,
)
from .groups import (
    group_from_relations,
    group_from_orders,
    direct_sum,
    power,
    presentation,
    subquotient,
    homology_at,
    tensor_and_tor1,
    parse_group,
)

__all__ = [
    'SmithForm',
    'int_matrix',
    'zeros',
    'identity',
    'matmul',
    'smith_normal_form',
    'hermite_normal_form',
    'kernel_basis',
    'solve_integer',
    'rank',
    'is_unimodular',
    'group_from_relations',
    'group_from_orders',
    'direct_sum',
    'power',
    'presentation',
    'subquotient',
    'homology_at',
    'tensor_and_tor1',
    'parse_group',
]
