"""
Tests for the verification drivers
"""

import time

import pytest

from src.enumeration.generators import random_position
from src.enumeration.verify import (
    RED_BLUE,
    Mismatch,
    SuiteBounds,
    suite_positions,
    verify_duality,
    verify_reduction,
    verify_strategy,
    verify_theorem1,
)
from src.game.position import Color
from src.solver.search import OutcomeClass, PlayConvention, solve

PATH_TEXT = "ground 0\nedge 0 0 1 B\nedge 1 1 2 R\n"


class TestSuiteBounds:

    def test_strings_follow_max_edges_by_default(self):
        assert SuiteBounds(max_edges=3).strings_bound == 3

    def test_strings_bound_never_below_max_edges(self):
        assert SuiteBounds(max_edges=3, string_edges=7).strings_bound == 7
        assert SuiteBounds(max_edges=5, string_edges=2).strings_bound == 5

    def test_vertex_bounds(self):
        bounds = SuiteBounds(max_edges=2, graph_vertices=4, random_edges=8)
        assert bounds.graph_vertex_bound == 2
        assert bounds.random_vertex_bound == 9

    def test_positions_are_distinct(self):
        listed = [text for text, _ in suite_positions(SuiteBounds(3, random_trials=30,
                                                                  random_edges=4))]
        assert len(listed) == len(set(listed))
        assert PATH_TEXT in listed


class TestClassifierSuite:

    def test_empty_suite(self):
        report = verify_theorem1(0, 0, 0)
        assert report.positions_checked == 1
        assert report.passed
        assert report.mismatches == []

    def test_two_edges(self):
        report = verify_theorem1(2, 0, 0)
        assert report.passed
        assert PATH_TEXT in {text for text, _ in suite_positions(SuiteBounds(2))}

    def test_with_random_trials(self):
        report = verify_theorem1(3, 25, 6, seed=42, string_edges=4)
        assert report.passed, report.mismatches
        assert report.bounds['string_edges'] == 4

    def test_report_is_reproducible(self):
        first = verify_theorem1(2, 10, 5, seed=7).to_dict()
        second = verify_theorem1(2, 10, 5, seed=7).to_dict()
        assert first == second
        assert 'timing' not in first

    def test_timing_only_on_request(self):
        data = verify_theorem1(1, 0, 0).to_dict(include_timing=True)
        assert set(data['timing']) == {'elapsed_seconds'}


class TestReduction:

    def test_small_suite(self):
        report = verify_reduction(2, 10, 5, seed=42)
        assert report.passed, report.mismatches
        assert report.findings['terminal_green_checked'] > 0

    def test_empty_suite(self):
        report = verify_reduction(0, 0, 0)
        assert report.positions_checked == 1
        assert report.passed


class TestStrategy:

    def test_small_suite(self):
        report = verify_strategy(3, string_edges=4)
        assert report.passed, report.mismatches
        assert report.findings['applicable_positions'] > 0
        assert len(report.findings['lowest_id_cut_loses_examples']) <= 20


class TestDuality:

    def test_red_blue(self):
        report = verify_duality(2)
        assert report.passed
        assert report.bounds['colors'] == "BR"

    def test_with_green(self):
        report = verify_duality(2, colors=(Color.BLUE, Color.RED, Color.GREEN))
        assert report.passed
        assert report.positions_checked > len(list(suite_positions(SuiteBounds(2), RED_BLUE,
                                                                   include_random=False)))


def test_mismatches_sort_by_position():
    later = Mismatch("ground 0\nedge 0 0 1 R\n", "classifier", "L", "R")
    earlier = Mismatch("ground 0\nedge 0 0 1 B\n", "classifier", "R", "L")
    assert sorted([later, earlier]) == [earlier, later]


@pytest.mark.slow
class TestAcceptance:

    def test_theorem1(self):
        report = verify_theorem1(5, 2000, 9, seed=42, string_edges=7)
        assert report.passed
        assert report.bounds['random_trials'] == 2000
        assert report.bounds['random_edges'] == 9
        assert report.bounds['string_edges'] == 7
        assert report.positions_checked > 2000

    def test_reduction(self):
        report = verify_reduction(4, 1000, 8, seed=42)
        assert report.passed
        assert report.bounds['random_trials'] == 1000
        assert report.bounds['random_edges'] == 8

    def test_strategy(self):
        assert verify_strategy(5, string_edges=7).passed

    def test_duality(self):
        assert verify_duality(5, string_edges=7).passed

    def test_duality_with_green(self):
        assert verify_duality(3, colors=(Color.BLUE, Color.RED, Color.GREEN)).passed

    def test_eighteen_edge_bench_position(self):
        position = random_position(18, 10, (Color.BLUE, Color.RED, Color.GREEN), 42, exact=True)
        assert len(position) == 18
        for convention in PlayConvention:
            started = time.perf_counter()
            report = solve(position, convention, memoize=True)
            elapsed = time.perf_counter() - started
            assert elapsed <= 60.0, f"{convention.value} took {elapsed:.1f}s"
            assert report.outcome in OutcomeClass
            stats = report.stats.as_dict()
            assert set(stats) == {'nodes_expanded', 'memo_hits', 'lookups', 'max_depth'}
            assert stats['nodes_expanded'] > 0
            assert 0 < stats['max_depth'] <= 18
