"""Command dispatch for the toromatic CLI.

Every command turns a validated fan into a text report and a structured
payload; run() renders one of them and maps library errors to exit codes.
"""

import json
import logging
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

from ..core import formatter
from ..core.fans import is_complete, orbit_closure_fan, star_subdivision
from ..core.ktheory import (
    SPLITTING,
    blowup_tor_delta,
    flatness_report,
    higher_tor_table,
    link_obstructions,
    merkurjev_e1_page,
    stanley_reisner_presentation,
    subdivision_safe,
    tor_table,
)
from ..core.polyhedral import DEFAULT_MAX_NODES, enough_limits
from ..core.simplicial import complex_of_fan, link, reduced_cohomology, reduced_homology
from ..models.errors import HypothesesNotMet, SearchBudgetExceeded
from ..models.fan import Cone, Fan
from ..models.group import INTEGERS, AbelianGroup
from ..storage.fan_file import dump_fan_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_HYPOTHESES = 2
EXIT_BUDGET = 3

FAN_COMMANDS = [
    'validate', 'homology', 'links', 'check-flat', 'check-limits', 'check-safe',
    'tor', 'higher-tor', 'e1', 'blowup', 'orbit', 'subdivide', 'presentation',
]
CONE_COMMANDS = ['blowup', 'orbit', 'subdivide']
COMMANDS = FAN_COMMANDS + ['selftest']

Report = Tuple[str, Dict[str, Any]]


class CommandResult(NamedTuple):
    output: str
    exit_code: int
    error: Optional[str] = None


def _groups(groups: Dict[int, AbelianGroup]) -> Dict[str, str]:
    return {str(k): str(g) for k, g in sorted(groups.items())}


def _require_cone(options: Dict[str, Any], command: str, fan: Fan) -> Cone:
    vectors = options.get('cone')
    if vectors is None:
        raise ValueError(f"command {command} needs --cone")
    return fan.cone_from_vectors(vectors)


def _validate(fan: Fan, options: Dict[str, Any]) -> Report:
    complete = is_complete(fan)
    data = {'fan': fan.to_dict(), 'valid': True, 'pure': fan.is_pure(), 'complete': complete}
    return formatter.format_validation(fan, complete), data


def _homology(fan: Fan, options: Dict[str, Any]) -> Report:
    coefficients = options.get('coefficients') or INTEGERS
    cx = complex_of_fan(fan)
    homology = reduced_homology(cx, coefficients)
    cohomology = reduced_cohomology(cx, coefficients)
    data = {
        'coefficients': str(coefficients),
        'dim': cx.dim,
        'f_vector': cx.f_vector(),
        'homology': _groups(homology),
        'cohomology': _groups(cohomology),
    }
    return formatter.format_homology(cx, homology, cohomology, coefficients), data


def _links(fan: Fan, options: Dict[str, Any]) -> Report:
    cx = complex_of_fan(fan)
    rows = []
    for sigma in fan.all_cones:
        if not sigma:
            continue
        lk = link(cx, sigma)
        rows.append((fan.label(sigma), lk.dim, reduced_homology(lk)))
    data = {'links': [{'face': label, 'dim': dim, 'homology': _groups(h)} for label, dim, h in rows]}
    return formatter.format_links(rows), data


def _check_flat(fan: Fan, options: Dict[str, Any]) -> Report:
    report = flatness_report(fan)
    return formatter.format_flatness(report), report.to_dict()


def _check_limits(fan: Fan, options: Dict[str, Any]) -> Report:
    found, certificate = enough_limits(fan, options.get('max_nodes', DEFAULT_MAX_NODES))
    return formatter.format_limits(found, certificate), {'enough_limits': found, 'certificate': certificate}


def _check_safe(fan: Fan, options: Dict[str, Any]) -> Report:
    safe, offenders = subdivision_safe(fan)
    data = {
        'subdivision_safe': safe,
        'offenders': [{'face': label, 'degree': degree} for label, degree in offenders],
    }
    return formatter.format_safety(safe, offenders), data


def _tor(fan: Fan, options: Dict[str, Any]) -> Report:
    table = tor_table(fan)
    return formatter.format_tor_table(table), table.to_dict()


def _higher_tor(fan: Fan, options: Dict[str, Any]) -> Report:
    kq = options.get('kq')
    if kq is None:
        raise ValueError("command higher-tor needs --kq")
    method = options.get('method') or SPLITTING
    table = higher_tor_table(fan, kq, method)
    data = table.to_dict()
    data['method'] = method
    return formatter.format_tor_table(table), data


def _e1(fan: Fan, options: Dict[str, Any]) -> Report:
    page = merkurjev_e1_page(fan)
    return formatter.format_e1_page(page), page.to_dict()


def _blowup(fan: Fan, options: Dict[str, Any]) -> Report:
    sigma = _require_cone(options, 'blowup', fan)
    obstructions = link_obstructions(fan, sigma)
    deltas, invariant = blowup_tor_delta(fan, sigma)
    data = {
        'cone': fan.label(sigma),
        'deltas': _groups(deltas),
        'invariant': invariant,
        'link_obstructions': [{'face': f, 'degree': d} for f, d in obstructions],
    }
    return formatter.format_blowup(fan.label(sigma), deltas, invariant, obstructions), data


def _orbit(fan: Fan, options: Dict[str, Any]) -> Report:
    sigma = _require_cone(options, 'orbit', fan)
    closure = orbit_closure_fan(fan, sigma)
    return formatter.format_fan(closure), closure.to_dict()


def _subdivide(fan: Fan, options: Dict[str, Any]) -> Report:
    sigma = _require_cone(options, 'subdivide', fan)
    refined = star_subdivision(fan, sigma)
    return dump_fan_file(refined).rstrip('\n'), refined.to_dict()


def _presentation(fan: Fan, options: Dict[str, Any]) -> Report:
    relations = stanley_reisner_presentation(fan)
    data = {'rays': [list(r) for r in fan.rays], 'relations': relations}
    return formatter.format_presentation(fan, relations), data


HANDLERS: Dict[str, Callable[[Fan, Dict[str, Any]], Report]] = {
    'validate': _validate,
    'homology': _homology,
    'links': _links,
    'check-flat': _check_flat,
    'check-limits': _check_limits,
    'check-safe': _check_safe,
    'tor': _tor,
    'higher-tor': _higher_tor,
    'e1': _e1,
    'blowup': _blowup,
    'orbit': _orbit,
    'subdivide': _subdivide,
    'presentation': _presentation,
}


def render(text: str, data: Dict[str, Any], options: Dict[str, Any]) -> str:
    """Text report, or sorted JSON when options['json'] is set."""
    if options.get('json'):
        return json.dumps(data, indent=options.get('json_indent', 2), sort_keys=True, ensure_ascii=False)
    return text


def run(command: str, fan: Fan, options: Optional[Dict[str, Any]] = None) -> CommandResult:
    """Run one fan command.

    Args:
        command: One of FAN_COMMANDS
        fan: Validated fan
        options: cone (ray vectors), kq, method, coefficients, json,
            json_indent, max_nodes

    Returns:
        CommandResult with the rendered report and the exit code
    """
    options = options or {}
    if command not in HANDLERS:
        return CommandResult('', EXIT_INVALID, f"unknown command {command!r}; choose from {COMMANDS}")
    try:
        text, data = HANDLERS[command](fan, options)
    except HypothesesNotMet as e:
        logger.info(f"{command} on {fan!r}: hypotheses not met ({e.reason})")
        return CommandResult('', EXIT_HYPOTHESES, f"hypotheses not met: {e.reason}")
    except SearchBudgetExceeded as e:
        return CommandResult('', EXIT_BUDGET, str(e))
    except ValueError as e:
        return CommandResult('', EXIT_INVALID, str(e))
    return CommandResult(render(text, data, options), EXIT_OK)


def run_all(fan: Fan, options: Optional[Dict[str, Any]] = None,
            commands: Optional[List[str]] = None) -> Dict[str, CommandResult]:
    """Every fan command on one fan (cone commands only when a cone is given)."""
    options = options or {}
    results = {}
    for command in commands or FAN_COMMANDS:
        if command in CONE_COMMANDS and options.get('cone') is None:
            continue
        if command == 'higher-tor' and options.get('kq') is None:
            continue
        results[command] = run(command, fan, options)
    return results
