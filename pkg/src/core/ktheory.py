"""Tor of equivariant K-theory over the representation ring of the torus.

Everything here reduces to ranks of Koszul resolutions and to reduced
(co)homology of S_Δ and of its links. Tor_0 is never computed; only the rank
bound read off the E1 page is reported.
"""

import logging
from math import comb
from typing import Dict, List, Sequence, Tuple

from ..linalg.groups import direct_sum, power, tensor_and_tor1
from ..models.complex import SimplicialComplex
from ..models.errors import ConeNotInFan, DimensionTooSmall, HypothesesNotMet
from ..models.fan import Cone, Fan
from ..models.group import INTEGERS, ZERO, AbelianGroup
from ..models.reports import E1Page, FlatnessReport, TorTable
from .fans import orbit_closure_fan
from .sheaf import simple_sheaf_cohomology
from .simplicial import (
    complex_of_fan,
    homology_below_top,
    link,
    minimal_nonfaces,
    reduced_cohomology,
)

logger = logging.getLogger(__name__)

SPLITTING = 'splitting'
COEFFICIENTS = 'coefficients'
HIGHER_TOR_METHODS = (SPLITTING, COEFFICIENTS)


def koszul_tor_ranks(n: int, d: int) -> List[int]:
    """Ranks of Tor_i(RT_σ, Z) for i = 0..n-d, σ a d-dimensional cone in rank n."""
    if not 0 <= d <= n:
        raise ValueError(f"Invalid cone dimension {d} for ambient rank {n}")
    return [comb(n - d, i) for i in range(n - d + 1)]


def projective_dimension(n: int, d: int) -> int:
    """Length of the Koszul resolution of RT_σ."""
    if not 0 <= d <= n:
        raise ValueError(f"Invalid cone dimension {d} for ambient rank {n}")
    return n - d


def _link_offenders(fan: Fan, cx: SimplicialComplex, cones: Sequence[Cone]) -> List[Tuple[str, int]]:
    offenders = []
    for sigma in cones:
        for degree in homology_below_top(link(cx, sigma)):
            offenders.append((fan.label(sigma), degree))
    return offenders


def flatness_report(fan: Fan) -> FlatnessReport:
    """Purity, link conditions and the global condition on S_Δ."""
    cx = complex_of_fan(fan)
    nonempty = [c for c in fan.all_cones if c]
    report = FlatnessReport(
        pure=fan.is_pure(),
        link_offenders=_link_offenders(fan, cx, nonempty),
        global_offenders=homology_below_top(cx),
        fan_name=fan.name,
    )
    logger.debug(f"flatness of {fan!r}: {report.to_dict()}")
    return report


def subdivision_safe(fan: Fan) -> Tuple[bool, List[Tuple[str, int]]]:
    """Whether every nonempty face has a link with no reduced homology below its top degree.

    Returns:
        (verdict, list of (face label, degree) offenders)
    """
    cx = complex_of_fan(fan)
    offenders = _link_offenders(fan, cx, [c for c in fan.all_cones if c])
    return not offenders, offenders


def _require_hypotheses(fan: Fan) -> SimplicialComplex:
    """Purity and subdivision safety, or HypothesesNotMet naming the first violation."""
    if not fan.is_pure():
        low = [c for c in fan.max_cones if len(c) < fan.n]
        raise HypothesesNotMet(
            f"maximal cone {fan.label(low[0])} has dimension {len(low[0])} < {fan.n}"
        )
    safe, offenders = subdivision_safe(fan)
    if not safe:
        label, degree = offenders[0]
        raise HypothesesNotMet(
            f"link of {label} has reduced homology in degree {degree} below its top degree"
        )
    return complex_of_fan(fan)


def tor_table(fan: Fan) -> TorTable:
    """Tor_p(K_0^T(X), Z) = ⊕_{i=p+1..n} H̃^(i-p-1)(S_Δ, Z^C(n,i)) for p = 1..n.

    Raises:
        HypothesesNotMet: the fan is not pure or not subdivision safe
    """
    cx = _require_hypotheses(fan)
    cohomology = reduced_cohomology(cx)
    n = fan.n
    entries = {}
    for p in range(1, n + 1):
        entries[p] = direct_sum(*(power(cohomology.get(i - p - 1, ZERO), comb(n, i))
                                  for i in range(p + 1, n + 1)))
    return TorTable(n, entries)


def higher_tor_table(fan: Fan, kq: AbelianGroup, method: str = SPLITTING) -> TorTable:
    """Tor_p(K_q^T(X), Z) for a coefficient group K_q = kq.

    method="splitting" applies the split sequence to the K_0 table:
    Tor_p ⊗ K_q plus Tor_1^Z(Tor_(p-1), K_q) for p >= 2.
    method="coefficients" recomputes the formula with K_q^C(n,i) coefficients.

    Raises:
        HypothesesNotMet: as tor_table
        ValueError: unknown method
    """
    if method not in HIGHER_TOR_METHODS:
        raise ValueError(f"Invalid method: {method}. Must be one of {list(HIGHER_TOR_METHODS)}")
    n = fan.n
    entries: Dict[int, AbelianGroup] = {}
    if method == SPLITTING:
        base = tor_table(fan)
        for p in range(1, n + 1):
            tensor, _ = tensor_and_tor1(base[p], kq)
            if p == 1:
                entries[p] = tensor
            else:
                _, torsion = tensor_and_tor1(base[p - 1], kq)
                entries[p] = direct_sum(tensor, torsion)
    else:
        cx = _require_hypotheses(fan)
        cohomology = reduced_cohomology(cx, kq)
        for p in range(1, n + 1):
            entries[p] = direct_sum(*(power(cohomology.get(i - p - 1, ZERO), comb(n, i))
                                      for i in range(p + 1, n + 1)))
    return TorTable(n, entries, label=str(kq))


def merkurjev_e1_page(fan: Fan) -> E1Page:
    """E_1 page of the hypercohomology spectral sequence of the Koszul complexes.

    Column 1 is Z^|Δ_n| at q = -1. Column p in 2..n collects, over cones of
    dimension n-p+1, H̃^(p-2)(lk σ, Z^C(p-1, -1-q)) for q = -1..-p. Column
    n+1 is ⊕_i H^(n+1+q+i)(Δ, Z^C(n,i)(0)), the cohomology of the simple
    sheaf at the zero cone; Tor_t sits there at q = -t-n-1.

    Raises:
        HypothesesNotMet: as tor_table
    """
    cx = _require_hypotheses(fan)
    n = fan.n
    entries: Dict[Tuple[int, int], AbelianGroup] = {(1, -1): AbelianGroup.free(len(fan.cones_of_dim(n)))}

    for p in range(2, n + 1):
        for sigma in fan.cones_of_dim(n - p + 1):
            h = reduced_cohomology(link(cx, sigma)).get(p - 2, ZERO)
            if h.is_zero():
                continue
            for q in range(-1, -p - 1, -1):
                term = power(h, comb(p - 1, -1 - q))
                entries[(p, q)] = direct_sum(entries.get((p, q), ZERO), term)

    if n >= 1:
        zero_cone = simple_sheaf_cohomology(fan, (), INTEGERS)

        def at(k: int) -> AbelianGroup:
            return zero_cone[k] if 0 <= k < len(zero_cone) else ZERO

        for q in range(-2 * n - 1, 0):
            column = direct_sum(*(power(at(n + 1 + q + i), comb(n, i)) for i in range(n + 1)))
            if not column.is_zero():
                entries[(n + 1, q)] = column

    page = E1Page(n, entries)
    logger.debug(f"E1 page of {fan!r}: {len(page.entries)} nonzero entries, bound {page.tor0_rank_bound}")
    return page


def _resolve_cone(fan: Fan, sigma: Sequence[int]) -> Cone:
    sigma = tuple(sorted(sigma))
    if not fan.is_cone(sigma):
        raise ConeNotInFan([fan.rays[i] for i in sigma if 0 <= i < len(fan.rays)])
    return sigma


def link_obstructions(fan: Fan, sigma: Sequence[int]) -> List[Tuple[str, int]]:
    """Nonempty faces of sigma whose links have reduced homology below the top degree."""
    sigma = _resolve_cone(fan, sigma)
    cx = complex_of_fan(fan)
    faces = [c for c in fan.all_cones if c and set(c).issubset(sigma)]
    return _link_offenders(fan, cx, faces)


def blowup_tor_delta(fan: Fan, sigma: Sequence[int]) -> Tuple[Dict[int, AbelianGroup], bool]:
    """Change of Tor_i under the star subdivision at sigma, i = 1..n.

    delta_i = Tor_i(Y)^(d-1) with Y the orbit-closure fan of the d-dimensional
    cone sigma; entries past the rank of Y are zero.

    Returns:
        (deltas, invariant) where invariant means every delta vanishes

    Raises:
        ConeNotInFan: sigma is not a cone of fan
        DimensionTooSmall: dim sigma <= 1
        HypothesesNotMet: Y is not pure or not subdivision safe
    """
    sigma = _resolve_cone(fan, sigma)
    d = len(sigma)
    if d <= 1:
        raise DimensionTooSmall(fan.vectors(sigma), 2)
    closure = orbit_closure_fan(fan, sigma)
    try:
        table = tor_table(closure)
    except HypothesesNotMet as e:
        raise HypothesesNotMet(f"orbit closure of {fan.label(sigma)}: {e.reason}") from e
    deltas = {i: power(table[i], d - 1) if i <= closure.n else ZERO for i in range(1, fan.n + 1)}
    invariant = all(g.is_zero() for g in deltas.values())
    logger.debug(f"blow-up of {fan!r} at {fan.label(sigma)}: invariant={invariant}")
    return deltas, invariant


def stanley_reisner_presentation(fan: Fan) -> List[str]:
    """Relations Π_{ρ∈F} (X_ρ - 1) over the minimal non-faces F, rays labelled from 1."""
    relations = []
    for face in minimal_nonfaces(complex_of_fan(fan)):
        relations.append(''.join(f"(X_{i + 1} - 1)" for i in face))
    return relations
