"""
Misere Red-Blue outcome formula and the grounded-edge strategy behind it
"""

import logging
from typing import Optional, Tuple

from src.game.errors import GreenEdgeError
from src.game.position import Color, Move, Player, Position
from src.solver.search import OutcomeClass

logger = logging.getLogger(__name__)


def _red_blue_grounded(p: Position) -> Tuple[int, int]:
    """Single pass: (grounded blue, grounded red), rejecting green edges"""
    blue = red = 0
    ground = p.ground
    for edge in p.edges:
        if edge.color is Color.GREEN:
            raise GreenEdgeError(
                f"formula requires Red-Blue position; edge {edge.id} is green")
        if edge.u in ground or edge.v in ground:
            if edge.color is Color.BLUE:
                blue += 1
            else:
                red += 1
    return blue, red


def classify_misere_rb(p: Position) -> OutcomeClass:
    """Misere outcome of a pruned Red-Blue position from its grounded counts

    The player with fewer grounded edges of their own color wins: Left when
    R > B, Right when B > R, and the first player when B = R.
    """
    blue, red = _red_blue_grounded(p)
    if red > blue:
        return OutcomeClass.L
    if blue > red:
        return OutcomeClass.R
    return OutcomeClass.N


def statement_orientation(p: Position) -> OutcomeClass:
    """The transposed reading (L iff B > R); refuted by search, kept for regression tests"""
    return classify_misere_rb(p).swapped


def proof_strategy_move(p: Position, mover: Player) -> Optional[Move]:
    """Lowest-id grounded edge of the mover's own color, if any"""
    _red_blue_grounded(p)
    own = mover.own_color
    for edge in p.edges:
        if edge.color is own and p.is_grounded(edge):
            return Move(edge.id)
    return None
