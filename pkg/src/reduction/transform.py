"""
Red-Blue to Red-Blue-Green misere transformation
G -> G' (ground merged into one vertex) -> G_m (G' hung from one green edge)
"""

import logging
from typing import Iterable, List

from src.game.errors import GreenEdgeError, PositionTooLargeError
from src.game.position import MAX_EDGES, Color, Edge, Position, prune

logger = logging.getLogger(__name__)


def _fresh_vertices(used: Iterable[int], count: int) -> List[int]:
    """The ``count`` smallest non-negative integers not in ``used``"""
    used = set(used)
    fresh = []
    candidate = 0
    while len(fresh) < count:
        if candidate not in used:
            fresh.append(candidate)
        candidate += 1
    return fresh


def merge_ground(p: Position) -> Position:
    """Identify all ground vertices into one fresh vertex"""
    merged = _fresh_vertices(p.observable_vertices, 1)[0]
    ground = p.ground

    edges = []
    for edge in p.edges:
        u = merged if edge.u in ground else edge.u
        v = merged if edge.v in ground else edge.v
        edges.append(Edge(edge.id, u, v, edge.color))

    vertices = (p.vertices - ground) | {merged}
    return prune(Position(tuple(edges), frozenset({merged}), vertices))


def to_misere_instance(p: Position) -> Position:
    """Build G_m: merged position attached to a new ground by one green edge"""
    for edge in p.edges:
        if edge.color is Color.GREEN:
            raise GreenEdgeError(
                f"reduction requires Red-Blue position; edge {edge.id} is green")
    if len(p.edges) >= MAX_EDGES:
        # the green edge has to fit in the state key as well
        raise PositionTooLargeError(
            f"position has {len(p.edges)} edges; at most {MAX_EDGES - 1} fit with the green edge")

    merged, new_ground = _fresh_vertices(p.observable_vertices, 2)
    inner = merge_ground(p)

    green_id = 0 if p.max_edge_id is None else p.max_edge_id + 1
    edges = inner.edges + (Edge(green_id, new_ground, merged, Color.GREEN),)
    instance = Position(edges, frozenset({new_ground}), inner.vertices | {new_ground})
    logger.debug(f"Built misere instance with {len(edges)} edges (green edge {green_id})")
    return instance
