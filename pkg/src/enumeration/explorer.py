"""
Outcome tables for string collections whose grounded edges are green
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List

from src.enumeration.generators import Word, iter_string_collections, strings_position
from src.game.position import COLOR_ORDER, Color, Position, serialize_position
from src.solver.search import OutcomeClass, PlayConvention, outcome

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExplorerRow:
    position: str
    outcome: OutcomeClass

    def as_dict(self) -> Dict[str, str]:
        return {'position': self.position, 'outcome': self.outcome.value}


def _grounded_green(word: Word) -> bool:
    return word[0] is Color.GREEN


def _green_only_at_ground(word: Word) -> bool:
    return word[0] is Color.GREEN and Color.GREEN not in word[1:]


def enumerate_green_strings(max_edges: int, strict_green: bool = False) -> Iterator[Position]:
    """String collections whose grounded edge is green

    By default higher edges take any color; ``strict_green`` keeps green
    at the grounded edge only.
    """
    word_filter = _green_only_at_ground if strict_green else _grounded_green
    for words in iter_string_collections(max_edges, COLOR_ORDER, word_filter):
        yield strings_position(words)


def explore_green_strings(max_edges: int, strict_green: bool = False) -> List[ExplorerRow]:
    """Misere outcome of every collection, sorted by serialized position"""
    rows = [ExplorerRow(serialize_position(position), outcome(position, PlayConvention.MISERE))
            for position in enumerate_green_strings(max_edges, strict_green)]
    rows.sort(key=lambda row: row.position)
    logger.info(f"Explored {len(rows)} green-grounded string collections up to {max_edges} edges")
    return rows
