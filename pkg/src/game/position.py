"""
Hackenbush position model
Parsing, serialization, grounded-edge accounting, move generation and
ground-connectivity pruning
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Set, Tuple, Union

import networkx as nx

from src.game.errors import PositionFormatError, PositionTooLargeError, UnknownEdgeError

logger = logging.getLogger(__name__)

# Width of the StateKey bit vector
MAX_EDGES = 64


class Color(Enum):
    """Edge colors, valued by their position-file letter"""
    BLUE = "B"
    RED = "R"
    GREEN = "G"

    @property
    def swapped(self) -> "Color":
        """Blue and Red exchanged, Green fixed"""
        if self is Color.BLUE:
            return Color.RED
        if self is Color.RED:
            return Color.BLUE
        return self


COLOR_ORDER: Tuple[Color, ...] = (Color.BLUE, Color.RED, Color.GREEN)


class Player(Enum):
    """The two players"""
    LEFT = "L"
    RIGHT = "R"

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT

    @property
    def cuttable(self) -> FrozenSet[Color]:
        """Colors this player may remove"""
        return _CUTTABLE[self]

    @property
    def own_color(self) -> Color:
        return Color.BLUE if self is Player.LEFT else Color.RED


_CUTTABLE: Dict[Player, FrozenSet[Color]] = {
    Player.LEFT: frozenset({Color.BLUE, Color.GREEN}),
    Player.RIGHT: frozenset({Color.RED, Color.GREEN}),
}


@dataclass(frozen=True)
class Edge:
    """A colored edge; u == v is a loop"""
    id: int
    u: int
    v: int
    color: Color

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True, order=True)
class Move:
    """Cut of a single edge, identified by id"""
    edge_id: int


@dataclass(frozen=True)
class GroundedCounts:
    """Number of grounded edges per color"""
    blue: int = 0
    red: int = 0
    green: int = 0

    def as_dict(self) -> Dict[str, int]:
        return {'blue': self.blue, 'red': self.red, 'green': self.green}


class StateKey(NamedTuple):
    """Surviving-edge bit vector (indexed by the root's sorted edge ids) plus mover"""
    present: int
    mover: Player

    @property
    def packed(self) -> int:
        return (self.present << 1) | (1 if self.mover is Player.RIGHT else 0)


@dataclass(frozen=True)
class Position:
    """Colored multigraph with a ground set

    Vertices without incident edges are kept in ``vertices`` but take no
    part in equality, serialization or play.
    """
    edges: Tuple[Edge, ...] = ()
    ground: FrozenSet[int] = frozenset({0})
    vertices: FrozenSet[int] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        edges = tuple(sorted(self.edges, key=lambda e: e.id))
        ground = frozenset(self.ground)
        mentioned = set(ground) | set(self.vertices)
        for edge in edges:
            mentioned.add(edge.u)
            mentioned.add(edge.v)
        object.__setattr__(self, 'edges', edges)
        object.__setattr__(self, 'ground', ground)
        object.__setattr__(self, 'vertices', frozenset(mentioned))

    @classmethod
    def build(cls, edges: Iterable[Edge], ground: Iterable[int],
              vertices: Optional[Iterable[int]] = None) -> "Position":
        """Validate and return the pruned position"""
        edges = tuple(edges)
        ground = frozenset(ground)
        if not ground:
            raise PositionFormatError("no ground vertex declared")
        if len(edges) > MAX_EDGES:
            raise PositionTooLargeError(
                f"position has {len(edges)} edges; at most {MAX_EDGES} are supported")
        seen: Set[int] = set()
        for edge in edges:
            if edge.id < 0 or edge.u < 0 or edge.v < 0:
                raise PositionFormatError(f"negative id in edge {edge.id}")
            if edge.id in seen:
                raise PositionFormatError(f"duplicate edge id {edge.id}")
            seen.add(edge.id)
        return prune(cls(edges, ground, frozenset(vertices or ())))

    @classmethod
    def empty(cls) -> "Position":
        return cls()

    @property
    def edge_ids(self) -> Tuple[int, ...]:
        return tuple(edge.id for edge in self.edges)

    @property
    def max_edge_id(self) -> Optional[int]:
        return self.edges[-1].id if self.edges else None

    @property
    def observable_vertices(self) -> FrozenSet[int]:
        """Ground plus edge endpoints: the vertices a position file records"""
        used = set(self.ground)
        for edge in self.edges:
            used.add(edge.u)
            used.add(edge.v)
        return frozenset(used)

    @property
    def has_green(self) -> bool:
        return any(edge.color is Color.GREEN for edge in self.edges)

    def edge(self, edge_id: int) -> Edge:
        for edge in self.edges:
            if edge.id == edge_id:
                return edge
        raise UnknownEdgeError(f"edge {edge_id} not in position")

    def is_grounded(self, edge: Edge) -> bool:
        return edge.u in self.ground or edge.v in self.ground

    def __len__(self) -> int:
        return len(self.edges)


def _ground_component(edges: Iterable[Edge], ground: Iterable[int]) -> Set[int]:
    """Vertices reachable from any ground vertex"""
    graph = nx.MultiGraph()
    graph.add_nodes_from(ground)
    graph.add_edges_from((edge.u, edge.v, edge.id) for edge in edges)
    reachable: Set[int] = set()
    for vertex in sorted(ground):
        if vertex not in reachable:
            reachable |= nx.node_connected_component(graph, vertex)
    return reachable


def prune(p: Position) -> Position:
    """Drop every edge outside the connected components of the ground"""
    reachable = _ground_component(p.edges, p.ground)
    kept = tuple(edge for edge in p.edges if edge.u in reachable)
    if len(kept) == len(p.edges):
        return p
    logger.debug(f"Pruned {len(p.edges) - len(kept)} ungrounded edges")
    return Position(kept, p.ground, p.vertices)


def is_pruned(p: Position) -> bool:
    reachable = _ground_component(p.edges, p.ground)
    return all(edge.u in reachable for edge in p.edges)


# --- position file format -------------------------------------------------

_COLOR_LETTERS = {color.value: color for color in Color}


def _parse_int(token: str, what: str, line: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise PositionFormatError(f"{what} must be a non-negative integer, got '{token}'", line)
    return int(token)


def parse_position(text: str) -> Position:
    """Parse position-file text into a pruned Position"""
    ground: Set[int] = set()
    edges: List[Edge] = []
    seen_ids: Set[int] = set()

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        keyword = tokens[0]

        if keyword == 'ground':
            if len(tokens) < 2:
                raise PositionFormatError("'ground' needs at least one vertex id", line_number)
            ground.update(_parse_int(token, "vertex id", line_number) for token in tokens[1:])

        elif keyword == 'edge':
            if len(tokens) != 5:
                raise PositionFormatError(
                    "expected 'edge <eid> <u> <v> <color>'", line_number)
            edge_id = _parse_int(tokens[1], "edge id", line_number)
            u = _parse_int(tokens[2], "vertex id", line_number)
            v = _parse_int(tokens[3], "vertex id", line_number)
            color = _COLOR_LETTERS.get(tokens[4])
            if color is None:
                raise PositionFormatError(f"unknown color letter '{tokens[4]}'", line_number)
            if edge_id in seen_ids:
                raise PositionFormatError(f"duplicate edge id {edge_id}", line_number)
            seen_ids.add(edge_id)
            edges.append(Edge(edge_id, u, v, color))

        else:
            raise PositionFormatError(f"unknown directive '{keyword}'", line_number)

    if not ground:
        raise PositionFormatError("no ground vertex declared")

    position = Position.build(edges, ground)
    if len(position.edges) < len(edges):
        logger.info(f"Removed {len(edges) - len(position.edges)} edges not connected to the ground")
    return position


def serialize_position(p: Position) -> str:
    """Deterministic position-file text, edges sorted by id"""
    lines = ["ground " + " ".join(str(vertex) for vertex in sorted(p.ground))]
    for edge in p.edges:
        lines.append(f"edge {edge.id} {edge.u} {edge.v} {edge.color.value}")
    return "\n".join(lines) + "\n"


def load_position(path: Union[str, Path]) -> Position:
    path = Path(path)
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    position = parse_position(text)
    logger.debug(f"Loaded {len(position.edges)} edges from {path}")
    return position


def save_position(p: Position, path: Union[str, Path]):
    path = Path(path)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(serialize_position(p))
    logger.info(f"Position written to {path}")


# --- game operations ------------------------------------------------------

def grounded_counts(p: Position) -> GroundedCounts:
    """Count edges with an endpoint in the ground, per color"""
    counts = {color: 0 for color in Color}
    for edge in p.edges:
        if edge.u in p.ground or edge.v in p.ground:
            counts[edge.color] += 1
    return GroundedCounts(counts[Color.BLUE], counts[Color.RED], counts[Color.GREEN])


def legal_moves(p: Position, mover: Player) -> List[Move]:
    cuttable = mover.cuttable
    return [Move(edge.id) for edge in p.edges if edge.color in cuttable]


def apply_move(p: Position, m: Move) -> Position:
    """Remove the edge, then everything no longer connected to the ground"""
    remaining = tuple(edge for edge in p.edges if edge.id != m.edge_id)
    if len(remaining) == len(p.edges):
        raise UnknownEdgeError(f"edge {m.edge_id} not in position")
    return prune(Position(remaining, p.ground, p.vertices))


def state_key(p: Position, mover: Player, root: Position) -> StateKey:
    if len(root.edges) > MAX_EDGES:
        raise PositionTooLargeError(
            f"root has {len(root.edges)} edges; at most {MAX_EDGES} are supported")
    bit_of = {edge.id: index for index, edge in enumerate(root.edges)}
    present = 0
    for edge in p.edges:
        index = bit_of.get(edge.id)
        if index is None:
            raise UnknownEdgeError(f"edge {edge.id} not in root position")
        present |= 1 << index
    return StateKey(present, mover)


def swap_colors(p: Position) -> Position:
    """Exchange Blue and Red everywhere"""
    edges = tuple(Edge(edge.id, edge.u, edge.v, edge.color.swapped) for edge in p.edges)
    return Position(edges, p.ground, p.vertices)


# --- reference positions ---------------------------------------------------

def figure_one_position() -> Position:
    """Standard Red-Blue example: ground vertex a, three loops"""
    a, b, c, d, e, f, g, h, i, j, k, l = range(12)
    B, R = Color.BLUE, Color.RED
    layout = [
        (a, b, B), (b, c, B), (b, d, B), (c, e, R), (d, e, R), (e, f, B),
        (f, g, R), (g, h, B), (h, i, R), (f, j, B), (j, k, R), (k, l, B),
        (f, f, R), (i, i, B), (l, l, R),
    ]
    edges = [Edge(index, u, v, color) for index, (u, v, color) in enumerate(layout)]
    return Position.build(edges, {a})


def figure_two_position() -> Position:
    """Four lone grounded edges, two of each color, on separate ground vertices"""
    layout = [(0, 1, Color.BLUE), (2, 3, Color.BLUE), (4, 5, Color.RED), (6, 7, Color.RED)]
    edges = [Edge(index, u, v, color) for index, (u, v, color) in enumerate(layout)]
    return Position.build(edges, {0, 2, 4, 6})
