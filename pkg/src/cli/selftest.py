"""Golden checks over the bundled fan corpus."""

import logging
from typing import Any, Dict, List, Tuple

from ..core.fans import fan_from_dict
from ..linalg.groups import parse_group
from ..models.fan import Fan
from ..storage.interface import FanCorpusInterface
from .commands import (
    CONE_COMMANDS, EXIT_BUDGET, EXIT_HYPOTHESES, EXIT_OK, FAN_COMMANDS, run, run_all,
)

logger = logging.getLogger(__name__)

E12 = [[1, 0, 0, 0], [0, 1, 0, 0]]

# (fan, command, options, exit code, lines expected in the output)
GOLDEN: List[Tuple[str, str, Dict[str, Any], int, List[str]]] = [
    ('affine_plane', 'validate', {}, EXIT_OK, ['complete: NO']),
    ('affine_plane', 'check-flat', {}, EXIT_OK, ['flat: YES; Merkurjev spectral sequence degenerates']),
    ('affine_plane', 'check-limits', {}, EXIT_OK, ['enough limits: YES']),
    ('affine_plane', 'tor', {}, EXIT_OK, ['Tor_1 = 0', 'Tor_2 = 0']),
    ('projective_line', 'validate', {}, EXIT_OK, ['complete: YES']),
    ('projective_line', 'e1', {}, EXIT_OK,
     ['E_1^{1,-1} = Z^2', 'E_1^{2,-1} = Z', 'E_1^{2,-2} = Z', 'Tor_0 rank bound: 3']),
    ('projective_line', 'check-limits', {}, EXIT_OK, ['enough limits: YES']),
    ('projective_plane', 'validate', {}, EXIT_OK, ['complete: YES']),
    ('projective_plane', 'homology', {}, EXIT_OK, ['H_0 = 0', 'H_1 = Z']),
    ('projective_plane', 'check-flat', {}, EXIT_OK, ['flat: YES; Merkurjev spectral sequence degenerates']),
    ('projective_plane', 'check-limits', {}, EXIT_OK, ['enough limits: YES']),
    ('projective_plane', 'tor', {}, EXIT_OK, ['Tor_1 = 0', 'Tor_2 = 0']),
    ('product_of_lines', 'validate', {}, EXIT_OK, ['complete: YES']),
    ('product_of_lines', 'tor', {}, EXIT_OK, ['Tor_1 = 0', 'Tor_2 = 0']),
    ('triple_product', 'validate', {}, EXIT_OK, ['complete: YES']),
    ('triple_product', 'check-flat', {}, EXIT_OK, ['flat: YES; Merkurjev spectral sequence degenerates']),
    ('triple_product', 'tor', {}, EXIT_OK, ['Tor_1 = 0', 'Tor_2 = 0', 'Tor_3 = 0']),
    ('triple_product', 'check-limits', {}, EXIT_OK, ['enough limits: YES']),
    ('projective_plane', 'orbit', {'cone': [[1, 0]]}, EXIT_OK, ['rank: 1', 'rays: 2', 'maximal cones: 2']),
    ('affine_plane', 'subdivide', {'cone': [[1, 0], [0, 1]]}, EXIT_OK,
     ['  "rays": [[0, 1], [1, 0], [1, 1]],', '  "cones": [[0, 2], [1, 2]],']),
    ('two_opposite_quadrants', 'check-flat', {}, EXIT_OK,
     ['global condition: NO', 'flat: NO; Merkurjev spectral sequence does not degenerate']),
    ('two_opposite_quadrants', 'check-safe', {}, EXIT_OK, ['subdivision safe: YES']),
    ('two_opposite_quadrants', 'check-limits', {}, EXIT_OK, ['enough limits: NO']),
    ('two_opposite_quadrants', 'tor', {}, EXIT_OK, ['Tor_1 = Z', 'Tor_2 = 0']),
    ('two_opposite_quadrants', 'higher-tor', {'kq': parse_group('Z/3')}, EXIT_OK, ['Tor_1 = Z/3', 'Tor_2 = 0']),
    ('two_opposite_quadrants', 'e1', {}, EXIT_OK, ['E_1^{3,-4} = Z']),
    ('octant_example', 'validate', {}, EXIT_OK, ['complete: NO']),
    ('octant_example', 'check-limits', {}, EXIT_OK, ['enough limits: NO']),
    ('octant_example', 'check-flat', {}, EXIT_OK, ['flat: YES; Merkurjev spectral sequence degenerates']),
    ('octant_example', 'check-safe', {}, EXIT_OK, ['subdivision safe: YES']),
    ('octant_example', 'tor', {}, EXIT_OK, ['Tor_1 = 0', 'Tor_2 = 0', 'Tor_3 = 0']),
    ('pinched_octants', 'check-safe', {}, EXIT_OK, ['subdivision safe: NO', '  lk [[0,0,1]] has H_0 != 0']),
    ('pinched_octants', 'tor', {}, EXIT_HYPOTHESES, []),
    ('rank4_blowup_example', 'check-safe', {}, EXIT_OK, ['subdivision safe: NO']),
    ('rank4_blowup_example', 'tor', {}, EXIT_HYPOTHESES, []),
    ('rank4_blowup_example', 'blowup', {'cone': E12}, EXIT_OK, ['delta_1 = Z', 'Tor invariant: NO']),
]


def load_corpus_fan(corpus: FanCorpusInterface, name: str):
    """Validated fan for a corpus record.

    Raises:
        KeyError: no record with that name
    """
    record = corpus.get_fan(name)
    if record is None:
        raise KeyError(f"no fan named {name!r} in the corpus")
    return fan_from_dict(record, name)


def sweep_options(fan: Fan, options: Dict[str, Any]) -> Tuple[Dict[str, Any], List[str]]:
    """Options and command list for running every command on one fan.

    The cone is the first maximal cone of largest dimension; blowup needs
    dimension at least 2.
    """
    top = max(fan.max_cones, key=len)
    swept = {**options, 'kq': options.get('kq') or parse_group('Z/2')}
    commands = list(FAN_COMMANDS)
    if not top:
        commands = [c for c in commands if c not in CONE_COMMANDS]
        swept['cone'] = None
    else:
        swept['cone'] = [list(v) for v in fan.vectors(top)]
        if len(top) < 2:
            commands.remove('blowup')
    return swept, commands


def run_selftest(corpus: FanCorpusInterface, options: Dict[str, Any] = None) -> Tuple[str, int]:
    """Golden checks, then every command on every corpus fan.

    Returns:
        (report text, 0 when every check passed else 1)
    """
    options = dict(options or {})
    options['json'] = False
    lines = []
    failures = 0
    fans = {}

    for name in corpus.names():
        try:
            fans[name] = load_corpus_fan(corpus, name)
        except (KeyError, ValueError) as e:
            failures += 1
            lines.append(f"✗ {name}: {e}")

    for name, command, extra, code, expected in GOLDEN:
        if name not in fans:
            failures += 1
            lines.append(f"✗ {name} {command}: fan missing from corpus")
            continue
        result = run(command, fans[name], {**options, **extra})
        output = result.output.split('\n')
        missing = [line for line in expected if line not in output]
        if result.exit_code != code or missing:
            failures += 1
            lines.append(f"✗ {name} {command}: exit {result.exit_code} (expected {code}), missing {missing}")
        else:
            lines.append(f"✓ {name} {command}")

    for name, fan in fans.items():
        swept, commands = sweep_options(fan, options)
        results = run_all(fan, swept, commands)
        crashed = [c for c, r in results.items() if r.exit_code not in (EXIT_OK, EXIT_HYPOTHESES, EXIT_BUDGET)]
        if crashed:
            failures += 1
            lines.append(f"✗ {name}: {', '.join(crashed)} failed")
        else:
            lines.append(f"✓ {name}: {len(results)} commands")

    total = len(GOLDEN) + len(fans)
    lines.append(f"{total - failures}/{total} checks passed")
    logger.info(f"selftest: {failures} failures")
    return '\n'.join(lines), 0 if failures == 0 else 1
