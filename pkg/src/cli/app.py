"""Command-line entry point for Tor-o-matic."""

import argparse
import json
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..core.fans import validate_fan
from ..linalg.groups import parse_group
from ..models.fan import Fan
from ..storage.fan_file import parse_fan_file
from ..storage.json_storage import JSONFanCorpus
from ..utils.config import load_config, resolve_path
from .commands import COMMANDS, EXIT_INVALID, run
from .selftest import load_corpus_fan, run_selftest

logger = logging.getLogger(__name__)


def setup_logging(config: Dict[str, Any]) -> logging.Logger:
    """Configure the package logger: console on stderr plus a rotating log file."""
    package_logger = logging.getLogger('src')
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    # Console d'abord, pour les erreurs de démarrage
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG if config.get('debug') else logging.WARNING)
    console_handler.setFormatter(formatter)
    package_logger.addHandler(console_handler)

    if config.get('file_logging', True):
        logs_dir = resolve_path(config['log_dir'])
        try:
            logs_dir.mkdir(parents=True, exist_ok=True)
            log_file = logs_dir / config['log_file']
            file_handler = RotatingFileHandler(
                log_file,
                maxBytes=config['log_max_bytes'],
                backupCount=config['log_backup_count']
            )
            file_handler.setLevel(getattr(logging, str(config['log_level']).upper(), logging.INFO))
            file_handler.setFormatter(formatter)
            package_logger.addHandler(file_handler)
            package_logger.debug(f'File logging initialized: {log_file}')
        except Exception as e:
            package_logger.error(f'Failed to setup file logging: {e}', exc_info=True)
            package_logger.warning('Logging to console only')

    package_logger.setLevel(logging.DEBUG)
    package_logger.propagate = False
    return package_logger


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='toromatic',
        description='Tor des K-groupes équivariants des variétés toriques lisses'
    )
    parser.add_argument('command', choices=COMMANDS, help='Commande à exécuter')
    parser.add_argument('fan_file', nargs='?', default=None,
                        help='Fichier éventail JSON (dim, rays, cones)')
    parser.add_argument('--example', type=str, default=None,
                        help='Nom d\'un éventail du corpus fourni (remplace fan_file)')
    parser.add_argument('--cone', type=str, default=None,
                        help='Cône donné par ses rayons, ex. "[[1,0,0,0],[0,1,0,0]]"')
    parser.add_argument('--kq', type=str, default=None,
                        help='Groupe K_q pour higher-tor, ex. "Z/3" ou "Z^2 + Z/2"')
    parser.add_argument('--method', type=str, default='splitting',
                        choices=['splitting', 'coefficients'],
                        help='Méthode de calcul de higher-tor (défaut: splitting)')
    parser.add_argument('--coefficients', type=str, default='Z',
                        help='Groupe de coefficients pour homology (défaut: Z)')
    parser.add_argument('--json', action='store_true',
                        help='Sortie JSON structurée au lieu du texte')
    parser.add_argument('--config', type=str, default=None,
                        help='Fichier de configuration (défaut: config/settings.json)')
    parser.add_argument('--max-nodes', type=int, default=None,
                        help='Budget de nœuds pour check-limits')
    return parser


def _load_fan(args: argparse.Namespace, corpus: JSONFanCorpus) -> Fan:
    if args.example:
        return load_corpus_fan(corpus, args.example)
    if not args.fan_file:
        raise ValueError("a fan file or --example is required")
    path = Path(args.fan_file)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise ValueError(f"cannot read {path}: {e}")
    raw = parse_fan_file(text)
    if raw.name is None:
        raw.name = path.stem
    return validate_fan(raw)


def _options(args: argparse.Namespace, config: Dict[str, Any]) -> Dict[str, Any]:
    options: Dict[str, Any] = {
        'json': args.json,
        'json_indent': config['json_indent'],
        'max_nodes': args.max_nodes if args.max_nodes is not None else config['enough_limits_max_nodes'],
        'method': args.method,
        'coefficients': parse_group(args.coefficients),
    }
    if args.kq is not None:
        options['kq'] = parse_group(args.kq)
    if args.cone is not None:
        try:
            cone = json.loads(args.cone)
        except json.JSONDecodeError as e:
            raise ValueError(f"--cone is not valid JSON: {e.msg}")
        if not isinstance(cone, list) or not all(isinstance(v, list) for v in cone):
            raise ValueError(f"--cone must be a list of ray vectors, got {args.cone}")
        options['cone'] = cone
    return options


def main(argv: Optional[List[str]] = None) -> int:
    """Point d'entrée principal.

    Returns:
        Exit code: 0 ok, 1 invalid input, 2 hypotheses not met, 3 search budget exceeded
    """
    args = build_parser().parse_args(argv)
    config = load_config(args.config)
    setup_logging(config)
    corpus = JSONFanCorpus(str(resolve_path(config['corpus_file'])))

    try:
        options = _options(args, config)
        if args.command == 'selftest':
            output, code = run_selftest(corpus, options)
            print(output)
            return code
        fan = _load_fan(args, corpus)
    except (ValueError, KeyError) as e:
        message = e.args[0] if isinstance(e, KeyError) else str(e)
        print(f"Erreur: {message}", file=sys.stderr)
        return EXIT_INVALID

    logger.info(f"{args.command} on {fan!r}")
    result = run(args.command, fan, options)
    if result.output:
        print(result.output)
    if result.error:
        print(f"Erreur: {result.error}", file=sys.stderr)
    return result.exit_code
