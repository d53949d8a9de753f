"""JSON fan corpus."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from .interface import FanCorpusInterface
from ..utils.validators import validate_fan_record

logger = logging.getLogger(__name__)


class JSONFanCorpus(FanCorpusInterface):
    """Fan records stored as a JSON list in a single file."""

    def __init__(self, data_file: str = 'data/fans.json'):
        """Initialize the corpus, creating an empty file if needed."""
        self.data_file = Path(data_file)
        self.data_file.parent.mkdir(parents=True, exist_ok=True)
        if not self.data_file.exists():
            self._write_json(self.data_file, [])

    def _read_json(self, filepath: Path) -> Any:
        """Read JSON file with error handling."""
        try:
            with open(filepath, 'r', encoding='utf-8') as f:
                return json.load(f)
        except (FileNotFoundError, json.JSONDecodeError) as e:
            raise IOError(f"Error reading {filepath}: {e}")

    def _write_json(self, filepath: Path, data: Any) -> None:
        """Write JSON file atomically."""
        temp_file = filepath.with_suffix('.tmp')
        try:
            with open(temp_file, 'w', encoding='utf-8') as f:
                json.dump(data, f, indent=2, ensure_ascii=False)
            temp_file.replace(filepath)
        except Exception as e:
            if temp_file.exists():
                temp_file.unlink()
            raise IOError(f"Error writing {filepath}: {e}")

    def get_fan(self, name: str) -> Optional[Dict[str, Any]]:
        """Get a single fan record by name."""
        for record in self._read_json(self.data_file):
            if record.get('name') == name:
                return record
        return None

    def get_all_fans(self, filters: Optional[Dict[str, Any]] = None) -> List[Dict[str, Any]]:
        """Get all fan records, optionally filtered by dim and tags."""
        records = self._read_json(self.data_file)
        if not filters:
            return records

        filtered = []
        for record in records:
            match = True
            if 'dim' in filters and record.get('dim') != filters['dim']:
                match = False
            if 'tags' in filters:
                record_tags = record.get('tags', [])
                filter_tags = filters['tags']
                if isinstance(filter_tags, str):
                    filter_tags = [filter_tags]
                if not any(tag in record_tags for tag in filter_tags):
                    match = False
            if match:
                filtered.append(record)
        return filtered

    def add_fan(self, record: Dict[str, Any]) -> str:
        """Add a new fan record."""
        validated = validate_fan_record(record)
        records = self._read_json(self.data_file)

        if any(r.get('name') == validated['name'] for r in records):
            raise ValueError(f"Fan with name {validated['name']} already exists")

        records.append(validated)
        self._write_json(self.data_file, records)
        logger.info(f"Added fan {validated['name']} to {self.data_file}")
        return validated['name']

    def delete_fan(self, name: str) -> bool:
        """Delete a fan record."""
        records = self._read_json(self.data_file)
        remaining = [r for r in records if r.get('name') != name]
        if len(remaining) < len(records):
            self._write_json(self.data_file, remaining)
            return True
        return False

    def names(self) -> List[str]:
        return [r.get('name') for r in self._read_json(self.data_file)]
