"""Core logic for Tor-o-matic: fans, complexes, cones, sheaves and K-theory."""

from .fans import validate_fan, star_subdivision, quotient_map, orbit_closure_fan, is_complete, fan_from_dict
from .simplicial import (
    complex_of_fan,
    link,
    boundary_matrix,
    chain_complex,
    reduced_homology,
    reduced_cohomology,
    homology_below_top,
    minimal_nonfaces,
)
from .polyhedral import (
    dual_description,
    canonical_form,
    cone_equal,
    contains,
    is_subcone,
    intersect,
    is_full_dimensional,
    interior_point,
    pos_cone,
    enough_limits,
)
from .sheaf import (
    validate_sheaf,
    constant_sheaf,
    simple_sheaf,
    zero_sheaf,
    sections,
    global_sections,
    is_flabby,
    poset_sheaf_cohomology,
    simple_sheaf_cohomology,
)
from .ktheory import (
    koszul_tor_ranks,
    projective_dimension,
    flatness_report,
    subdivision_safe,
    tor_table,
    higher_tor_table,
    merkurjev_e1_page,
    link_obstructions,
    blowup_tor_delta,
    stanley_reisner_presentation,
)

__all__ = [
    'validate_fan', 'star_subdivision', 'quotient_map', 'orbit_closure_fan', 'is_complete', 'fan_from_dict',
    'complex_of_fan', 'link', 'boundary_matrix', 'chain_complex', 'reduced_homology',
    'reduced_cohomology', 'homology_below_top', 'minimal_nonfaces',
    'dual_description', 'canonical_form', 'cone_equal', 'contains', 'is_subcone', 'intersect',
    'is_full_dimensional', 'interior_point', 'pos_cone', 'enough_limits',
    'validate_sheaf', 'constant_sheaf', 'simple_sheaf', 'zero_sheaf', 'sections',
    'global_sections', 'is_flabby', 'poset_sheaf_cohomology', 'simple_sheaf_cohomology',
    'koszul_tor_ranks', 'projective_dimension', 'flatness_report', 'subdivision_safe',
    'tor_table', 'higher_tor_table', 'merkurjev_e1_page', 'link_obstructions',
    'blowup_tor_delta', 'stanley_reisner_presentation',
]
