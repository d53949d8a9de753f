"""Canonical text rendering of fans and reports.

Output is deterministic: no timestamps, every collection is rendered in a
fixed order, groups use the canonical "Z^r + Z/d1 + ..." form.
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..models.complex import SimplicialComplex
from ..models.fan import Fan
from ..models.group import AbelianGroup
from ..models.reports import E1Page, FlatnessReport, TorTable

REPORT_WIDTH = 60
SEPARATOR = '=' * REPORT_WIDTH


def yes_no(flag: bool) -> str:
    return 'YES' if flag else 'NO'


def _format_box(title: str) -> str:
    """Title framed by separators."""
    return f"{SEPARATOR}\n{title}\n{SEPARATOR}"


def _wrap_text(lines: List[str], text: str, width: int = REPORT_WIDTH, indent: str = '') -> None:
    """Wrap text on spaces and append the pieces to lines."""
    current = indent
    for word in text.split():
        candidate = current + (' ' if current != indent else '') + word
        if len(candidate) <= width + len(indent):
            current = candidate
        else:
            if current != indent:
                lines.append(current)
            current = indent + word
    if current != indent:
        lines.append(current)


def format_fan(fan: Fan) -> str:
    """Rays and maximal cones of a fan."""
    lines = [_format_box(f"Fan {fan.name or ''}".rstrip())]
    lines.append(f"rank: {fan.n}")
    lines.append(f"rays: {len(fan.rays)}")
    for i, ray in enumerate(fan.rays):
        lines.append(f"  {i}: {list(ray)}")
    lines.append(f"maximal cones: {len(fan.max_cones)}")
    for cone in fan.max_cones:
        lines.append(f"  {list(cone)} = {fan.label(cone)}")
    lines.append(f"f-vector: {[len(fan.cones_of_dim(d)) for d in range(fan.max_dim() + 1)]}")
    return '\n'.join(lines)


def format_validation(fan: Fan, complete: bool) -> str:
    lines = [format_fan(fan)]
    lines.append(f"pure: {yes_no(fan.is_pure())}")
    lines.append(f"complete: {yes_no(complete)}")
    lines.append("valid: YES")
    return '\n'.join(lines)


def format_homology(cx: SimplicialComplex, homology: Dict[int, AbelianGroup],
                    cohomology: Dict[int, AbelianGroup], coefficients: AbelianGroup) -> str:
    """Reduced homology and cohomology of S_Δ."""
    lines = [_format_box(f"Reduced (co)homology of S_Delta, coefficients {coefficients}")]
    lines.append(f"vertices: {cx.vertex_count}")
    lines.append(f"dim: {cx.dim}")
    lines.append(f"f-vector: {cx.f_vector()}")
    for i, g in sorted(homology.items()):
        lines.append(f"H_{i} = {g}")
    for i, g in sorted(cohomology.items()):
        lines.append(f"H^{i} = {g}")
    return '\n'.join(lines)


def format_links(rows: Sequence[Tuple[str, int, Dict[int, AbelianGroup]]]) -> str:
    """rows: (face label, link dimension, reduced homology of the link)."""
    lines = [_format_box("Links of the nonempty faces of S_Delta")]
    for label, dim, homology in rows:
        groups = ', '.join(f"H_{i} = {g}" for i, g in sorted(homology.items()))
        lines.append(f"lk {label}: dim {dim}; {groups}")
    return '\n'.join(lines)


def format_flatness(report: FlatnessReport) -> str:
    lines = [_format_box("Flatness of K_0 over RT")]
    lines.append(f"pure: {yes_no(report.pure)}")
    lines.append(f"link conditions: {yes_no(report.link_conditions_ok)}")
    for label, degree in report.link_offenders:
        lines.append(f"  lk {label} has H_{degree} != 0")
    lines.append(f"global condition: {yes_no(report.global_ok)}")
    for degree in report.global_offenders:
        lines.append(f"  S_Delta has H_{degree} != 0")
    lines.append(f"Cohen-Macaulay: {yes_no(report.cohen_macaulay)}")
    if report.merkurjev_degenerates:
        lines.append("flat: YES; Merkurjev spectral sequence degenerates")
    else:
        lines.append("flat: NO; Merkurjev spectral sequence does not degenerate")
    return '\n'.join(lines)


def format_limits(found: bool, certificate: Dict[str, Any]) -> str:
    lines = [_format_box("Enough limits")]
    lines.append(f"enough limits: {yes_no(found)}")
    if found:
        lines.append(f"interior point: {certificate['interior_point']}")
        lines.append("choice:")
        for tau, sigma in certificate['choice'].items():
            lines.append(f"  {tau} -> {sigma}")
    elif 'blocking_cone' in certificate:
        lines.append(f"no full-dimensional cone contains {certificate['blocking_cone']}")
    else:
        lines.append(f"search exhausted after {certificate['nodes']} nodes")
    return '\n'.join(lines)


def format_safety(safe: bool, offenders: Sequence[Tuple[str, int]]) -> str:
    lines = [_format_box("Subdivision safety")]
    lines.append(f"subdivision safe: {yes_no(safe)}")
    for label, degree in offenders:
        lines.append(f"  lk {label} has H_{degree} != 0")
    return '\n'.join(lines)


def format_tor_table(table: TorTable, title: Optional[str] = None) -> str:
    lines = [_format_box(title or f"Tor_p^RT({table.label}, Z)")]
    for p, g in table.entries.items():
        lines.append(f"Tor_{p} = {g}")
    return '\n'.join(lines)


def format_e1_page(page: E1Page) -> str:
    """Nonzero entries column by column, then the Tor_0 rank bound."""
    lines = [_format_box(f"E_1 page, columns 1..{page.n + 1}")]
    for p in range(1, page.n + 2):
        for q, g in sorted(page.column(p).items(), reverse=True):
            lines.append(f"E_1^{{{p},{q}}} = {g}")
    lines.append(f"Tor_0 rank bound: {page.tor0_rank_bound}")
    return '\n'.join(lines)


def format_blowup(label: str, deltas: Dict[int, AbelianGroup], invariant: bool,
                  obstructions: Sequence[Tuple[str, int]]) -> str:
    lines = [_format_box(f"Blow-up at {label}")]
    for i, g in sorted(deltas.items()):
        lines.append(f"delta_{i} = {g}")
    lines.append(f"Tor invariant: {yes_no(invariant)}")
    for face, degree in obstructions:
        lines.append(f"  lk {face} has H_{degree} != 0")
    return '\n'.join(lines)


def format_presentation(fan: Fan, relations: Sequence[str]) -> str:
    lines = [_format_box("Stanley-Reisner relations")]
    for i, ray in enumerate(fan.rays):
        lines.append(f"X_{i + 1} <-> {list(ray)}")
    if not relations:
        lines.append("no relations")
    for relation in relations:
        _wrap_text(lines, f"{relation} = 0", indent='  ')
    return '\n'.join(lines)
