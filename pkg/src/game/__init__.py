"""
Game model for the Hackenbush workbench
"""

from .errors import (
    HackenbushError,
    PositionFormatError,
    PositionTooLargeError,
    UnknownEdgeError,
    GreenEdgeError,
    ConfigError
)
from .position import (
    MAX_EDGES,
    Color,
    Player,
    Edge,
    Move,
    Position,
    GroundedCounts,
    StateKey,
    parse_position,
    serialize_position,
    load_position,
    save_position,
    grounded_counts,
    legal_moves,
    apply_move,
    state_key,
    prune,
    is_pruned,
    swap_colors,
    figure_one_position,
    figure_two_position
)

__all__ = [
    'HackenbushError',
    'PositionFormatError',
    'PositionTooLargeError',
    'UnknownEdgeError',
    'GreenEdgeError',
    'ConfigError',
    'MAX_EDGES',
    'Color',
    'Player',
    'Edge',
    'Move',
    'Position',
    'GroundedCounts',
    'StateKey',
    'parse_position',
    'serialize_position',
    'load_position',
    'save_position',
    'grounded_counts',
    'legal_moves',
    'apply_move',
    'state_key',
    'prune',
    'is_pruned',
    'swap_colors',
    'figure_one_position',
    'figure_two_position'
]
