"""Fan file format: a JSON object with dim, rays, cones and an optional name.

    {"dim": 2, "rays": [[1, 0], [0, 1]], "cones": [[0, 1]], "name": "affine_plane"}

Cones list ray indices. Parsing is structural only; geometry is checked by
src.core.fans.validate_fan.
"""

import json
import re
from typing import Any, Dict, Union

from ..models.errors import ParseError
from ..models.fan import Fan, FanData
from ..utils.validators import check_indices


def _line_of(text: str, key: str) -> int:
    """Line number of the first occurrence of "key", or 1."""
    match = re.search(rf'"{re.escape(key)}"', text)
    if match is None:
        return 1
    return text.count('\n', 0, match.start()) + 1


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_fan_file(text: str) -> FanData:
    """Parse fan file text.

    Raises:
        ParseError: malformed JSON or a field of the wrong shape
        IndexOutOfRange: a cone refers to a missing ray
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.msg)
    if not isinstance(data, dict):
        raise ParseError(1, "a fan file must be a JSON object")

    for field in FanData.REQUIRED_FIELDS:
        if field not in data:
            raise ParseError(1, f"missing field {field!r}")
    if not _is_int(data['dim']) or data['dim'] < 0:
        raise ParseError(_line_of(text, 'dim'), f"dim must be a nonnegative integer, got {data['dim']!r}")
    n = data['dim']

    rays = data['rays']
    if not isinstance(rays, list):
        raise ParseError(_line_of(text, 'rays'), "rays must be a list")
    for i, ray in enumerate(rays):
        if not isinstance(ray, list) or not all(_is_int(x) for x in ray):
            raise ParseError(_line_of(text, 'rays'), f"ray {i} is not a list of integers: {ray!r}")
        if len(ray) != n:
            raise ParseError(_line_of(text, 'rays'), f"ray {i} has {len(ray)} coordinates, expected {n}")

    cones = data['cones']
    if not isinstance(cones, list):
        raise ParseError(_line_of(text, 'cones'), "cones must be a list")
    for i, cone in enumerate(cones):
        if not isinstance(cone, list) or not all(_is_int(x) for x in cone):
            raise ParseError(_line_of(text, 'cones'), f"cone {i} is not a list of ray indices: {cone!r}")

    name = data.get('name')
    if name is not None and not isinstance(name, str):
        raise ParseError(_line_of(text, 'name'), "name must be a string")
    return check_indices(FanData(n, rays, cones, name))


def dump_fan_file(fan: Union[Fan, FanData]) -> str:
    """Render a fan file, one field per line."""
    data: Dict[str, Any] = fan.to_dict()
    lines = ['{']
    items = list(data.items())
    for k, (key, value) in enumerate(items):
        comma = ',' if k < len(items) - 1 else ''
        lines.append(f'  "{key}": {json.dumps(value, ensure_ascii=False)}{comma}')
    lines.append('}')
    return '\n'.join(lines) + '\n'
