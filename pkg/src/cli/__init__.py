"""Command-line interface for Tor-o-matic."""

from .app import build_parser, main, setup_logging
from .commands import COMMANDS, EXIT_BUDGET, EXIT_HYPOTHESES, EXIT_INVALID, EXIT_OK, CommandResult, run, run_all
from .selftest import GOLDEN, load_corpus_fan, run_selftest, sweep_options

__all__ = [
    'build_parser', 'main', 'setup_logging',
    'COMMANDS', 'EXIT_OK', 'EXIT_INVALID', 'EXIT_HYPOTHESES', 'EXIT_BUDGET',
    'CommandResult', 'run', 'run_all',
    'GOLDEN', 'load_corpus_fan', 'run_selftest', 'sweep_options',
]
