"""Abstract interface for fan corpora.

The CLI and the self-test only talk to this interface, so the bundled JSON
corpus can be swapped for another backend.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional


class FanCorpusInterface(ABC):
    """Abstract base class for fan corpus backends."""

    @abstractmethod
    def get_fan(self, name: str) -> Optional[Dict[str, Any]]:
        """Get a single fan record by name."""
        pass

    @abstractmethod
    def get_all_fans(self, filters: Optional[Dict[str, Any]] = None) -> List[Dict[str, Any]]:
        """Get all fan records, optionally filtered by dim and tags."""
        pass

    @abstractmethod
    def add_fan(self, record: Dict[str, Any]) -> str:
        """Add a new fan record. Returns its name."""
        pass

    @abstractmethod
    def delete_fan(self, name: str) -> bool:
        """Delete a fan record. Returns True if successful."""
        pass

    @abstractmethod
    def names(self) -> List[str]:
        """Names of all records in corpus order."""
        pass
