"""Configuration and validation helpers for Tor-o-matic."""

from .config import load_config, resolve_path
from .validators import check_indices, validate_fan_data, validate_fan_record

__all__ = ['load_config', 'resolve_path', 'check_indices', 'validate_fan_data', 'validate_fan_record']
