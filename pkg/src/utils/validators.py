"""Validators for fan records."""

from typing import Any, Dict

from ..models.errors import IndexOutOfRange
from ..models.fan import FanData


def check_indices(raw: FanData) -> FanData:
    """Every cone index must point at a listed ray."""
    for position, cone in enumerate(raw.cones):
        for index in cone:
            if isinstance(index, bool) or not isinstance(index, int) or not 0 <= index < len(raw.rays):
                raise IndexOutOfRange(position, index, len(raw.rays))
    return raw


def validate_fan_data(data: Dict[str, Any]) -> Dict[str, Any]:
    """Validate and return the fan file part of a record."""
    raw = check_indices(FanData.from_dict(data))
    return raw.to_dict()


def validate_fan_record(data: Dict[str, Any]) -> Dict[str, Any]:
    """Validate and normalize a corpus record (fan file plus name and tags)."""
    if not data.get('name'):
        raise ValueError("Missing required field: name")
    tags = data.get('tags', [])
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise ValueError(f"Invalid tags: {tags}. Must be a list of strings")
    record = validate_fan_data(data)
    record['name'] = data['name']
    record['tags'] = list(tags)
    if 'description' in data:
        record['description'] = str(data['description'])
    return record
