"""
Position generators
Exhaustive shape-class enumeration, seeded random positions and an
independent counter for string collections
"""

import itertools
import logging
from enum import Enum
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.game.position import COLOR_ORDER, Color, Edge, Position, prune

logger = logging.getLogger(__name__)

Word = Tuple[Color, ...]


class ShapeClass(Enum):
    """Families of positions the enumerator can produce"""
    STRINGS = "strings"
    TREES = "trees"
    GRAPHS = "graphs"


def ordered_colors(colors: Iterable[Color]) -> Tuple[Color, ...]:
    """Colors in the canonical B, R, G order, duplicates dropped"""
    wanted = set(colors)
    palette = tuple(color for color in COLOR_ORDER if color in wanted)
    if not palette:
        raise ValueError("at least one color is required")
    return palette


def parse_colors(letters: str) -> Tuple[Color, ...]:
    """'BRG' style command-line letters to a color palette"""
    try:
        return ordered_colors(Color(letter) for letter in letters.upper())
    except ValueError as e:
        raise ValueError(f"invalid color letters '{letters}': {e}") from e


# --- strings ----------------------------------------------------------------

def string_words(max_length: int, palette: Sequence[Color],
                 word_filter: Optional[Callable[[Word], bool]] = None) -> List[Word]:
    """Color words ordered by length, then lexicographically by palette order"""
    words = []
    for length in range(1, max_length + 1):
        for word in itertools.product(palette, repeat=length):
            if word_filter is None or word_filter(word):
                words.append(word)
    return words


def _collections(words: Sequence[Word], start: int, remaining: int,
                 chosen: List[Word]) -> Iterator[List[Word]]:
    yield chosen
    for index in range(start, len(words)):
        word = words[index]
        if len(word) > remaining:
            break
        yield from _collections(words, index, remaining - len(word), chosen + [word])


def strings_position(words: Sequence[Word]) -> Position:
    """Each word becomes a path hanging from its own ground vertex"""
    if not words:
        return Position.empty()
    edges = []
    ground = []
    next_vertex = 0
    for word in words:
        below = next_vertex
        ground.append(below)
        next_vertex += 1
        for color in word:
            edges.append(Edge(len(edges), below, next_vertex, color))
            below = next_vertex
            next_vertex += 1
    return Position(tuple(edges), frozenset(ground))


def iter_string_collections(max_edges: int, palette: Sequence[Color],
                            word_filter: Optional[Callable[[Word], bool]] = None
                            ) -> Iterator[List[Word]]:
    """Multisets of words with total length <= max_edges, canonical order"""
    words = string_words(max_edges, palette, word_filter)
    yield from _collections(words, 0, max_edges, [])


# --- trees ------------------------------------------------------------------

def _bfs_parent_sequences(size: int) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing parent sequences of plane trees with ``size`` edges

    Node 0 is a virtual root; node i > 0 hangs from parent[i-1] < i.
    """
    def extend(sequence: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if len(sequence) == size:
            yield sequence
            return
        node = len(sequence) + 1
        lowest = sequence[-1] if sequence else 0
        for parent in range(lowest, node):
            yield from extend(sequence + (parent,))
    yield from extend(())


def _forest_position(parents: Sequence[int], colors: Sequence[Color]) -> Position:
    """Children of the virtual root each get their own ground vertex"""
    if not parents:
        return Position.empty()
    size = len(parents)
    ground = []
    edges = []
    for index, (parent, color) in enumerate(zip(parents, colors)):
        child = index + 1
        if parent == 0:
            anchor = 0 if not ground else size + len(ground)
            ground.append(anchor)
        else:
            anchor = parent
        edges.append(Edge(index, anchor, child, color))
    return Position(tuple(edges), frozenset(ground))


# --- graphs -----------------------------------------------------------------

def _colorings(slots: Sequence[Tuple[int, int]],
               palette: Sequence[Color]) -> Iterator[Tuple[Color, ...]]:
    """Color assignments up to permutation of parallel edges in the same slot"""
    groups = [len(list(group)) for _, group in itertools.groupby(slots)]
    per_group = [list(itertools.combinations_with_replacement(palette, size)) for size in groups]
    for choice in itertools.product(*per_group):
        yield tuple(color for group in choice for color in group)


def _graph_positions(max_edges: int, palette: Sequence[Color],
                     max_vertices: int) -> Iterator[Position]:
    vertices = range(max_vertices + 1)
    slot_list = [(u, v) for u in vertices for v in vertices if u <= v]
    for size in range(max_edges + 1):
        for slots in itertools.combinations_with_replacement(slot_list, size):
            uncolored = tuple(Edge(index, u, v, palette[0]) for index, (u, v) in enumerate(slots))
            # the pruned image of a disconnected multiset is enumerated at a smaller size
            if len(prune(Position(uncolored)).edges) != size:
                continue
            for coloring in _colorings(slots, palette):
                edges = tuple(Edge(index, u, v, color)
                              for index, ((u, v), color) in enumerate(zip(slots, coloring)))
                yield Position(edges, frozenset({0}))


def enumerate_positions(shape: ShapeClass, max_edges: int, colors: Iterable[Color],
                        max_vertices: Optional[int] = None) -> Iterator[Position]:
    """Every pruned position of the shape class with at most ``max_edges`` edges

    For graphs the vertex set is {0..max_vertices} (default max_edges) with
    ground {0}. Isomorphic duplicates are not removed.
    """
    if max_edges < 0:
        raise ValueError("max_edges must be non-negative")
    palette = ordered_colors(colors)

    if shape is ShapeClass.STRINGS:
        for words in iter_string_collections(max_edges, palette):
            yield strings_position(words)

    elif shape is ShapeClass.TREES:
        for size in range(max_edges + 1):
            for parents in _bfs_parent_sequences(size):
                for coloring in itertools.product(palette, repeat=size):
                    yield _forest_position(parents, coloring)

    else:
        vertices = max_edges if max_vertices is None else max_vertices
        yield from _graph_positions(max_edges, palette, vertices)


# --- random positions -------------------------------------------------------

class SeededStream:
    """Raw 64-bit PCG64 outputs reduced modulo n

    The bit generator is seeded through numpy's SeedSequence; raw outputs are
    stable across numpy releases, so positions drawn from a seed are too.
    """

    def __init__(self, seed: int):
        self._bit_generator = np.random.PCG64(seed)

    def below(self, n: int) -> int:
        return int(self._bit_generator.random_raw()) % n


def random_position(max_edges: int, max_vertices: int, colors: Iterable[Color], seed: int,
                    exact: bool = False) -> Position:
    """Seeded random pruned position with ground {0}

    Draw order: edge count in [0, max_edges] (skipped when ``exact``), then
    per edge an anchor among the reached vertices (in order of first reach),
    the other endpoint in [0, max_vertices) and a color from the palette.
    """
    if max_vertices < 1:
        raise ValueError("max_vertices must be at least 1")
    palette = ordered_colors(colors)
    stream = SeededStream(seed)

    count = max_edges if exact else stream.below(max_edges + 1)
    reached = [0]
    reached_set = {0}
    edges = []
    for index in range(count):
        anchor = reached[stream.below(len(reached))]
        other = stream.below(max_vertices)
        color = palette[stream.below(len(palette))]
        edges.append(Edge(index, anchor, other, color))
        if other not in reached_set:
            reached_set.add(other)
            reached.append(other)

    return Position(tuple(edges), frozenset({0}))


# --- independent counter ----------------------------------------------------

def count_string_collections(edges: int, colors: int) -> int:
    """Number of string collections with exactly ``edges`` edges over ``colors`` colors

    Euler transform of the word counts colors**length:
    a(n) = (1/n) * sum_{k=1..n} b(k) a(n-k), b(k) = sum_{d | k} d * colors**d.
    """
    counts = [1]
    for n in range(1, edges + 1):
        total = 0
        for k in range(1, n + 1):
            b = sum(d * colors ** d for d in range(1, k + 1) if k % d == 0)
            total += b * counts[n - k]
        counts.append(total // n)
    return counts[edges]
