"""Fan corpus storage and the fan file format."""

from .interface import FanCorpusInterface
from .json_storage import JSONFanCorpus
from .fan_file import dump_fan_file, parse_fan_file

__all__ = ['FanCorpusInterface', 'JSONFanCorpus', 'parse_fan_file', 'dump_fan_file']
