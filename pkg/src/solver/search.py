"""
Exact outcome search for Hackenbush positions
Memoized win/loss search under normal and misere play
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Set, Tuple

from src.game.errors import PositionTooLargeError, UnknownEdgeError
from src.game.position import (
    MAX_EDGES,
    Color,
    Edge,
    Move,
    Player,
    Position,
    StateKey,
)

logger = logging.getLogger(__name__)


class PlayConvention(Enum):
    """Who wins when the player to move has no move"""
    NORMAL = "normal"
    MISERE = "misere"


class OutcomeClass(Enum):
    """Outcome classes of a position"""
    L = "L"
    R = "R"
    P = "P"
    N = "N"

    @property
    def swapped(self) -> "OutcomeClass":
        """Outcome with the players' roles exchanged"""
        if self is OutcomeClass.L:
            return OutcomeClass.R
        if self is OutcomeClass.R:
            return OutcomeClass.L
        return self


def combine_outcome(left_first: Player, right_first: Player) -> OutcomeClass:
    """Outcome class from the winners with Left and with Right moving first"""
    if left_first is Player.LEFT and right_first is Player.LEFT:
        return OutcomeClass.L
    if left_first is Player.RIGHT and right_first is Player.RIGHT:
        return OutcomeClass.R
    if left_first is Player.LEFT:
        return OutcomeClass.N
    return OutcomeClass.P


@dataclass
class SearchStats:
    """Counters of one search session"""
    nodes_expanded: int = 0
    memo_hits: int = 0
    lookups: int = 0
    max_depth: int = 0

    def as_dict(self) -> Dict[str, int]:
        return {
            'nodes_expanded': self.nodes_expanded,
            'memo_hits': self.memo_hits,
            'lookups': self.lookups,
            'max_depth': self.max_depth,
        }


class SearchSession:
    """Search over the sub-positions of one root under one convention

    States are bit vectors over the root's edges (bit i is the i-th edge in
    ascending id order), so the memo table is only meaningful for this root.
    """

    def __init__(self, root: Position, convention: PlayConvention, memoize: bool = True):
        if len(root.edges) > MAX_EDGES:
            raise PositionTooLargeError(
                f"position has {len(root.edges)} edges; at most {MAX_EDGES} are supported")

        self.root = root
        self.convention = convention
        self.memoize = memoize
        self.stats = SearchStats()

        self._memo: Dict[int, bool] = {}
        self._edges: Tuple[Edge, ...] = root.edges
        self._bit_of: Dict[int, int] = {edge.id: index for index, edge in enumerate(root.edges)}
        self._ground: Tuple[int, ...] = tuple(sorted(root.ground))
        self._full: int = (1 << len(root.edges)) - 1
        self._misere = convention is PlayConvention.MISERE

        # vertex -> ((edge bit, far endpoint), ...)
        adjacency: Dict[int, List[Tuple[int, int]]] = {}
        for index, edge in enumerate(root.edges):
            bit = 1 << index
            adjacency.setdefault(edge.u, []).append((bit, edge.v))
            if not edge.is_loop:
                adjacency.setdefault(edge.v, []).append((bit, edge.u))
        self._adjacency: Dict[int, Tuple[Tuple[int, int], ...]] = {
            vertex: tuple(links) for vertex, links in adjacency.items()
        }

        # index 0: Left, index 1: Right
        self._cuttable: Tuple[int, int] = (
            self._color_mask({Color.BLUE, Color.GREEN}),
            self._color_mask({Color.RED, Color.GREEN}),
        )
        self._loops: int = sum(1 << index for index, edge in enumerate(root.edges) if edge.is_loop)

    def _color_mask(self, colors: Set[Color]) -> int:
        mask = 0
        for index, edge in enumerate(self._edges):
            if edge.color in colors:
                mask |= 1 << index
        return mask

    @staticmethod
    def _mover_index(mover: Player) -> int:
        return 0 if mover is Player.LEFT else 1

    @property
    def full_state(self) -> int:
        return self._full

    def cut(self, present: int, bit: int) -> int:
        """State after removing one edge bit and pruning"""
        survivors = present & ~bit
        if bit & self._loops:
            return survivors

        adjacency = self._adjacency
        reached = set(self._ground)
        stack = list(self._ground)
        kept = 0
        while stack:
            vertex = stack.pop()
            for edge_bit, other in adjacency.get(vertex, ()):
                if survivors & edge_bit:
                    kept |= edge_bit
                    if other not in reached:
                        reached.add(other)
                        stack.append(other)
        return kept

    def _wins(self, present: int, mover: int, depth: int) -> bool:
        """True iff the player to move (0 Left, 1 Right) wins from this state"""
        stats = self.stats
        stats.lookups += 1
        key = (present << 1) | mover
        if self.memoize:
            cached = self._memo.get(key)
            if cached is not None:
                stats.memo_hits += 1
                return cached

        stats.nodes_expanded += 1
        if depth > stats.max_depth:
            stats.max_depth = depth

        moves = present & self._cuttable[mover]
        if not moves:
            result = self._misere
        else:
            result = False
            opponent = 1 - mover
            while moves:
                low = moves & -moves
                moves ^= low
                if not self._wins(self.cut(present, low), opponent, depth + 1):
                    result = True
                    break

        if self.memoize:
            self._memo[key] = result
        return result

    # --- public queries ----------------------------------------------------

    def state_of(self, position: Position) -> int:
        present = 0
        for edge in position.edges:
            index = self._bit_of.get(edge.id)
            if index is None:
                raise UnknownEdgeError(f"edge {edge.id} not in session root")
            present |= 1 << index
        return present

    def position_of(self, present: int) -> Position:
        edges = tuple(edge for index, edge in enumerate(self._edges) if present >> index & 1)
        return Position(edges, self.root.ground, self.root.vertices)

    def key_of(self, present: int, mover: Player) -> StateKey:
        return StateKey(present, mover)

    def wins(self, mover: Player, present: Optional[int] = None) -> bool:
        present = self._full if present is None else present
        return self._wins(present, self._mover_index(mover), 0)

    def winner(self, mover: Player, present: Optional[int] = None) -> Player:
        return mover if self.wins(mover, present) else mover.opponent

    def outcome(self, present: Optional[int] = None) -> OutcomeClass:
        return combine_outcome(self.winner(Player.LEFT, present),
                               self.winner(Player.RIGHT, present))

    def legal_bits(self, mover: Player, present: Optional[int] = None) -> List[int]:
        present = self._full if present is None else present
        moves = present & self._cuttable[self._mover_index(mover)]
        bits = []
        while moves:
            low = moves & -moves
            moves ^= low
            bits.append(low)
        return bits

    def move_of(self, bit: int) -> Move:
        return Move(self._edges[bit.bit_length() - 1].id)

    def optimal_moves(self, mover: Player, present: Optional[int] = None) -> List[Move]:
        """Every move after which the opponent loses, ascending by edge id"""
        present = self._full if present is None else present
        opponent = self._mover_index(mover.opponent)
        winning = []
        for bit in self.legal_bits(mover, present):
            if not self._wins(self.cut(present, bit), opponent, 1):
                winning.append(self.move_of(bit))
        return winning

    def reachable_states(self) -> Iterator[Tuple[int, Player]]:
        """Every (state, mover) reachable by legal play, either player starting"""
        seen: Set[Tuple[int, Player]] = set()
        stack = [(self._full, Player.LEFT), (self._full, Player.RIGHT)]
        while stack:
            present, mover = stack.pop()
            if (present, mover) in seen:
                continue
            seen.add((present, mover))
            yield present, mover
            for bit in self.legal_bits(mover, present):
                stack.append((self.cut(present, bit), mover.opponent))


@dataclass
class SolveReport:
    """Full solution of a position under one convention"""
    convention: PlayConvention
    outcome: OutcomeClass
    winners: Dict[Player, Player]
    optimal_moves: Dict[Player, List[Move]]
    stats: SearchStats = field(default_factory=SearchStats)


def winner(p: Position, mover: Player, conv: PlayConvention, memoize: bool = True) -> Player:
    """Winner under optimal play with ``mover`` to move"""
    return SearchSession(p, conv, memoize).winner(mover)


def outcome(p: Position, conv: PlayConvention, memoize: bool = True) -> OutcomeClass:
    return SearchSession(p, conv, memoize).outcome()


def optimal_moves(p: Position, mover: Player, conv: PlayConvention,
                  memoize: bool = True) -> List[Move]:
    return SearchSession(p, conv, memoize).optimal_moves(mover)


def solve(p: Position, conv: PlayConvention, memoize: bool = True) -> SolveReport:
    """Outcome, first-mover winners and optimal first moves for both players"""
    session = SearchSession(p, conv, memoize)
    winners = {mover: session.winner(mover) for mover in Player}
    moves = {mover: session.optimal_moves(mover) for mover in Player}
    report = SolveReport(
        convention=conv,
        outcome=combine_outcome(winners[Player.LEFT], winners[Player.RIGHT]),
        winners=winners,
        optimal_moves=moves,
        stats=session.stats
    )
    logger.debug(f"Solved {len(p.edges)}-edge position ({conv.value}): "
                 f"{report.outcome.value}, {session.stats.nodes_expanded} nodes, "
                 f"{session.stats.memo_hits} memo hits")
    return report
