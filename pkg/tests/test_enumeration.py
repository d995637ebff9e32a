"""
Tests for the position generators
"""

from pathlib import Path

import pytest

from src.enumeration.generators import (
    ShapeClass,
    SeededStream,
    count_string_collections,
    enumerate_positions,
    parse_colors,
    random_position,
)
from src.game.position import Color, is_pruned, serialize_position

GOLDEN_DIR = Path(__file__).parent / "golden"

BLUE = (Color.BLUE,)
RED_BLUE = (Color.BLUE, Color.RED)
ALL_COLORS = (Color.BLUE, Color.RED, Color.GREEN)


def texts(shape, max_edges, colors, **kwargs):
    return [serialize_position(p) for p in enumerate_positions(shape, max_edges, colors, **kwargs)]


class TestStrings:

    def test_one_edge_two_colors(self):
        assert texts(ShapeClass.STRINGS, 1, RED_BLUE) == [
            "ground 0\n",
            "ground 0\nedge 0 0 1 B\n",
            "ground 0\nedge 0 0 1 R\n",
        ]

    def test_zero_edges(self):
        for colors in (BLUE, ALL_COLORS):
            assert texts(ShapeClass.STRINGS, 0, colors) == ["ground 0\n"]

    def test_two_edges_one_color(self):
        assert texts(ShapeClass.STRINGS, 2, BLUE) == [
            "ground 0\n",
            "ground 0\nedge 0 0 1 B\n",
            "ground 0 2\nedge 0 0 1 B\nedge 1 2 3 B\n",
            "ground 0\nedge 0 0 1 B\nedge 1 1 2 B\n",
        ]

    @pytest.mark.parametrize("colors", [BLUE, RED_BLUE, ALL_COLORS])
    def test_counts_match_independent_counter(self, colors):
        sizes = [len(p) for p in enumerate_positions(ShapeClass.STRINGS, 5, colors)]
        for edges in range(6):
            assert sizes.count(edges) == count_string_collections(edges, len(colors))

    def test_counter_values(self):
        # partitions of 4, and two-color collections of up to 3 edges
        assert count_string_collections(4, 1) == 5
        assert [count_string_collections(k, 2) for k in range(4)] == [1, 2, 7, 20]

    def test_distinct_and_pruned(self):
        generated = list(enumerate_positions(ShapeClass.STRINGS, 4, RED_BLUE))
        assert all(is_pruned(p) for p in generated)
        assert len({serialize_position(p) for p in generated}) == len(generated)

    def test_deterministic(self):
        assert texts(ShapeClass.STRINGS, 4, ALL_COLORS) == texts(ShapeClass.STRINGS, 4, ALL_COLORS)


class TestTrees:

    def test_plane_forest_counts(self):
        # Catalan numbers 1, 1, 2, 5 of parent sequences per size
        sizes = [len(p) for p in enumerate_positions(ShapeClass.TREES, 3, BLUE)]
        assert [sizes.count(k) for k in range(4)] == [1, 1, 2, 5]
        assert len(list(enumerate_positions(ShapeClass.TREES, 3, RED_BLUE))) == 1 + 2 + 8 + 40

    def test_roots_get_own_ground_vertex(self):
        forests = list(enumerate_positions(ShapeClass.TREES, 2, BLUE))
        two_roots = [p for p in forests if len(p.ground) == 2]
        assert len(two_roots) == 1
        assert serialize_position(two_roots[0]) == "ground 0 3\nedge 0 0 1 B\nedge 1 3 2 B\n"

    def test_all_pruned_and_acyclic(self):
        for p in enumerate_positions(ShapeClass.TREES, 4, RED_BLUE):
            assert is_pruned(p)
            assert not any(edge.is_loop for edge in p.edges)


class TestGraphs:

    def test_one_edge_one_extra_vertex(self):
        # ground loop and 0-1; the floating loop at 1 is not pruned
        assert texts(ShapeClass.GRAPHS, 1, BLUE, max_vertices=1) == [
            "ground 0\n",
            "ground 0\nedge 0 0 0 B\n",
            "ground 0\nedge 0 0 1 B\n",
        ]
        assert len(texts(ShapeClass.GRAPHS, 1, RED_BLUE, max_vertices=1)) == 5

    def test_parallel_edges_colored_once_per_multiset(self):
        double = [text for text in texts(ShapeClass.GRAPHS, 2, RED_BLUE, max_vertices=1)
                  if text.count("edge") == 2 and "edge 0 0 1" in text and "edge 1 0 1" in text]
        assert len(double) == 3

    def test_all_pruned(self):
        generated = list(enumerate_positions(ShapeClass.GRAPHS, 3, RED_BLUE, max_vertices=3))
        assert generated
        assert all(is_pruned(p) for p in generated)
        assert all(p.ground == frozenset({0}) for p in generated)

    def test_negative_bound(self):
        with pytest.raises(ValueError):
            list(enumerate_positions(ShapeClass.GRAPHS, -1, BLUE))


class TestRandomPosition:

    def test_same_arguments_same_position(self):
        assert random_position(8, 6, RED_BLUE, 42) == random_position(8, 6, RED_BLUE, 42)

    def test_zero_edges(self):
        p = random_position(0, 6, RED_BLUE, 7)
        assert len(p) == 0
        assert p.ground == frozenset({0})

    def test_exact_count(self):
        assert len(random_position(12, 5, ALL_COLORS, 3, exact=True)) == 12

    @pytest.mark.parametrize("seed", range(20))
    def test_bounds_and_pruned(self, seed):
        p = random_position(9, 5, RED_BLUE, seed)
        assert len(p) <= 9
        assert is_pruned(p)
        assert all(edge.color in RED_BLUE for edge in p.edges)
        assert all(0 <= edge.v < 5 for edge in p.edges)
        assert p.edge_ids == tuple(range(len(p)))

    def test_needs_a_vertex(self):
        with pytest.raises(ValueError):
            random_position(3, 0, RED_BLUE, 1)

    def test_stream_is_seeded(self):
        first, second = SeededStream(5), SeededStream(5)
        assert [first.below(1000) for _ in range(10)] == [second.below(1000) for _ in range(10)]

    @pytest.mark.parametrize("name, exact", [
        ("random_8_6_BR_42.hkb", False),
        ("random_8_6_BR_42_exact.hkb", True),
    ])
    def test_golden_snapshot(self, name, exact):
        golden = GOLDEN_DIR / name
        assert golden.exists(), f"missing golden file {golden}"
        text = serialize_position(random_position(8, 6, RED_BLUE, 42, exact=exact))
        assert text == golden.read_text(encoding="utf-8")

    def test_first_draw_matches_numpy_stream(self):
        # first raw output for seed 42 is the one behind default_rng(42).random()
        stream = SeededStream(42)
        assert (stream.below(2 ** 64) >> 11) / 2 ** 53 == pytest.approx(0.7739560485559633)


class TestParseColors:

    def test_canonical_order(self):
        assert parse_colors("rb") == RED_BLUE
        assert parse_colors("GBRB") == ALL_COLORS

    def test_invalid(self):
        with pytest.raises(ValueError, match="invalid color letters"):
            parse_colors("BX")
        with pytest.raises(ValueError):
            parse_colors("")
