"""
Enumeration, verification and exploration
"""

from .generators import (
    ShapeClass,
    SeededStream,
    enumerate_positions,
    random_position,
    count_string_collections,
    parse_colors
)
from .verify import (
    Mismatch,
    SuiteBounds,
    VerificationReport,
    suite_positions,
    verify_theorem1,
    verify_reduction,
    verify_strategy,
    verify_duality
)
from .explorer import ExplorerRow, enumerate_green_strings, explore_green_strings

__all__ = [
    'ShapeClass',
    'SeededStream',
    'enumerate_positions',
    'random_position',
    'count_string_collections',
    'parse_colors',
    'Mismatch',
    'SuiteBounds',
    'VerificationReport',
    'suite_positions',
    'verify_theorem1',
    'verify_reduction',
    'verify_strategy',
    'verify_duality',
    'ExplorerRow',
    'enumerate_green_strings',
    'explore_green_strings'
]
