"""Data models for Tor-o-matic."""

from .errors import (
    FanValidationError,
    NonPrimitiveRay,
    DuplicateRay,
    DependentGenerators,
    NotRegular,
    BadIntersection,
    ConeNotInFan,
    DimensionTooSmall,
    ParseError,
    IndexOutOfRange,
    FaceNotInComplex,
    NotOpen,
    RankMismatch,
    DimensionMismatch,
    CompositionNonzero,
    HypothesesNotMet,
    SearchBudgetExceeded,
)
from .group import AbelianGroup, ZERO, INTEGERS
from .fan import Cone, Fan, FanData
from .complex import SimplicialComplex
from .cone import RationalCone, primitive
from .sheaf import FanPoset, PosetSheaf
from .reports import E1Page, FlatnessReport, TorTable

__all__ = [
    'FanValidationError', 'NonPrimitiveRay', 'DuplicateRay', 'DependentGenerators',
    'NotRegular', 'BadIntersection', 'ConeNotInFan', 'DimensionTooSmall', 'ParseError',
    'IndexOutOfRange', 'FaceNotInComplex', 'NotOpen', 'RankMismatch', 'DimensionMismatch',
    'CompositionNonzero', 'HypothesesNotMet', 'SearchBudgetExceeded',
    'AbelianGroup', 'ZERO', 'INTEGERS',
    'Cone', 'Fan', 'FanData',
    'SimplicialComplex',
    'RationalCone', 'primitive',
    'FanPoset', 'PosetSheaf',
    'E1Page', 'FlatnessReport', 'TorTable',
]
