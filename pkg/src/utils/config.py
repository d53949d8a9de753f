"""Settings loader."""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).parent.parent.parent

DEFAULT_CONFIG: Dict[str, Any] = {
    'corpus_file': 'data/fans.json',
    'log_level': 'INFO',
    'log_dir': 'logs',
    'log_file': 'toromatic.log',
    'log_max_bytes': 10 * 1024 * 1024,
    'log_backup_count': 5,
    'file_logging': True,
    'enough_limits_max_nodes': 200000,
    'json_indent': 2,
}


def resolve_path(path: Union[str, Path]) -> Path:
    """Relative paths are taken from the project root."""
    path = Path(path)
    return path if path.is_absolute() else PROJECT_ROOT / path


def load_config(config_path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """Load settings from JSON over the defaults.

    Args:
        config_path: Settings file (default: $TOROMATIC_CONFIG, then config/settings.json)

    Returns:
        Settings dict with environment overrides applied
    """
    if config_path is None:
        config_path = os.environ.get('TOROMATIC_CONFIG') or PROJECT_ROOT / 'config' / 'settings.json'

    config = dict(DEFAULT_CONFIG)

    if os.path.exists(config_path):
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                user_config = json.load(f)
                config.update(user_config)
        except Exception as e:
            logger.warning(f"Could not load settings from {config_path}: {e}")

    # Surcharges par variables d'environnement
    if os.environ.get('TOROMATIC_LOG_LEVEL'):
        config['log_level'] = os.environ['TOROMATIC_LOG_LEVEL'].upper()
    if os.environ.get('TOROMATIC_CORPUS'):
        config['corpus_file'] = os.environ['TOROMATIC_CORPUS']
    config['debug'] = os.environ.get('TOROMATIC_DEBUG', 'False').lower() == 'true'
    return config
