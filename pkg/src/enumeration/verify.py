"""
Verification drivers
Bind the misere classifier and the reduction to the exhaustive solver over
exhaustive and seeded random position suites
"""

import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from src.enumeration.generators import ShapeClass, enumerate_positions, random_position
from src.game.position import Color, Player, Position, grounded_counts, serialize_position, swap_colors
from src.reduction.transform import merge_ground, to_misere_instance
from src.solver.classifier import classify_misere_rb, proof_strategy_move
from src.solver.search import OutcomeClass, PlayConvention, SearchSession, outcome

logger = logging.getLogger(__name__)

RED_BLUE: Tuple[Color, ...] = (Color.BLUE, Color.RED)


@dataclass(frozen=True, order=True)
class Mismatch:
    """One failed check"""
    position: str
    check: str
    expected: str
    got: str

    def as_dict(self) -> Dict[str, str]:
        return {'position': self.position, 'check': self.check,
                'expected': self.expected, 'got': self.got}


@dataclass
class SuiteBounds:
    """Sizes of the exhaustive and random parts of a suite"""
    max_edges: int = 0
    string_edges: Optional[int] = None
    graph_vertices: int = 4
    random_trials: int = 0
    random_edges: int = 0
    random_vertices: Optional[int] = None
    seed: int = 42

    @property
    def strings_bound(self) -> int:
        if self.string_edges is None:
            return self.max_edges
        return max(self.max_edges, self.string_edges)

    @property
    def graph_vertex_bound(self) -> int:
        return min(self.graph_vertices, self.max_edges)

    @property
    def random_vertex_bound(self) -> int:
        return self.random_edges + 1 if self.random_vertices is None else self.random_vertices

    def as_dict(self) -> Dict[str, Any]:
        return {
            'max_edges': self.max_edges,
            'string_edges': self.strings_bound,
            'graph_vertices': self.graph_vertex_bound,
            'random_trials': self.random_trials,
            'random_edges': self.random_edges,
            'random_vertices': self.random_vertex_bound,
        }


@dataclass
class VerificationReport:
    """Result of one suite; a pure function of (suite, bounds, seed) apart from timing"""
    suite: str
    bounds: Dict[str, Any]
    seed: int
    positions_checked: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)
    findings: Dict[str, Any] = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data = {
            'suite': self.suite,
            'bounds': dict(self.bounds),
            'seed': self.seed,
            'positions_checked': self.positions_checked,
            'passed': self.passed,
            'mismatches': [mismatch.as_dict() for mismatch in self.mismatches],
            'findings': self.findings,
        }
        if include_timing:
            data['timing'] = {'elapsed_seconds': round(self.elapsed_seconds, 3)}
        return data


def suite_positions(bounds: SuiteBounds, colors: Sequence[Color] = RED_BLUE,
                    include_random: bool = True) -> Iterator[Tuple[str, Position]]:
    """Strings, then graphs, then random trials; each distinct position once"""
    seen = set()

    def sources() -> Iterator[Position]:
        yield from enumerate_positions(ShapeClass.STRINGS, bounds.strings_bound, colors)
        yield from enumerate_positions(ShapeClass.GRAPHS, bounds.max_edges, colors,
                                       max_vertices=bounds.graph_vertex_bound)
        if include_random:
            for trial in range(bounds.random_trials):
                yield random_position(bounds.random_edges, bounds.random_vertex_bound,
                                      colors, bounds.seed + trial)

    for position in sources():
        text = serialize_position(position)
        if text in seen:
            continue
        seen.add(text)
        yield text, position


def _progress(items: Iterator, suite: str, enabled: bool) -> Iterator:
    return tqdm(items, desc=suite, unit="pos", file=sys.stderr, disable=not enabled)


def _finish(report: VerificationReport, started: float) -> VerificationReport:
    report.mismatches.sort()
    report.elapsed_seconds = time.perf_counter() - started
    if report.passed:
        logger.info(f"Suite '{report.suite}' passed: {report.positions_checked} positions")
    else:
        logger.warning(f"Suite '{report.suite}' found {len(report.mismatches)} mismatches "
                       f"over {report.positions_checked} positions")
    return report


def verify_theorem1(max_edges_exhaustive: int, random_trials: int, random_max_edges: int,
                    seed: int = 42, string_edges: Optional[int] = None,
                    graph_vertices: int = 4, random_vertices: Optional[int] = None,
                    progress: bool = False) -> VerificationReport:
    """Classifier against misere search on every Red-Blue suite position"""
    bounds = SuiteBounds(max_edges_exhaustive, string_edges, graph_vertices,
                         random_trials, random_max_edges, random_vertices, seed)
    report = VerificationReport('theorem1', bounds.as_dict(), seed)
    started = time.perf_counter()
    logger.info(f"Running suite 'theorem1' with bounds {bounds.as_dict()}")

    for text, position in _progress(suite_positions(bounds), 'theorem1', progress):
        report.positions_checked += 1
        expected = outcome(position, PlayConvention.MISERE)
        got = classify_misere_rb(position)
        if got is not expected:
            report.mismatches.append(Mismatch(text, 'classifier', expected.value, got.value))

    return _finish(report, started)


def _green_never_optimal(instance: Position, session: SearchSession) -> bool:
    """In G_m no reachable state lists the green grounded cut as optimal"""
    green_id = instance.max_edge_id
    for present, mover in session.reachable_states():
        for move in session.optimal_moves(mover, present):
            if move.edge_id == green_id:
                return False
    return True


def verify_reduction(max_edges_exhaustive: int, random_trials: int, random_max_edges: int,
                     seed: int = 42, string_edges: Optional[int] = None,
                     graph_vertices: int = 4, random_vertices: Optional[int] = None,
                     progress: bool = False) -> VerificationReport:
    """G_m under misere against G' under normal play, plus ground-merge invariance"""
    bounds = SuiteBounds(max_edges_exhaustive, string_edges, graph_vertices,
                         random_trials, random_max_edges, random_vertices, seed)
    report = VerificationReport('reduction', bounds.as_dict(), seed)
    started = time.perf_counter()
    logger.info(f"Running suite 'reduction' with bounds {bounds.as_dict()}")
    terminal_checked = 0

    for text, position in _progress(suite_positions(bounds), 'reduction', progress):
        report.positions_checked += 1
        merged = merge_ground(position)
        instance = to_misere_instance(position)

        misere_session = SearchSession(instance, PlayConvention.MISERE)
        got = misere_session.outcome()
        expected = outcome(merged, PlayConvention.NORMAL)
        if got is not expected:
            report.mismatches.append(Mismatch(text, 'reduction', expected.value, got.value))

        for conv in PlayConvention:
            before = outcome(position, conv)
            after = outcome(merged, conv)
            if before is not after:
                report.mismatches.append(
                    Mismatch(text, f'ground-merge/{conv.value}', before.value, after.value))

        counts = grounded_counts(instance)
        structure_ok = (len(instance.edges) == len(position.edges) + 1
                        and (counts.blue, counts.red, counts.green) == (0, 0, 1))
        if not structure_ok:
            report.mismatches.append(Mismatch(text, 'structure', 'one grounded green edge',
                                              str(counts.as_dict())))

        if len(position.edges) <= max_edges_exhaustive:
            terminal_checked += 1
            if not _green_never_optimal(instance, misere_session):
                report.mismatches.append(
                    Mismatch(text, 'terminal-green', 'green cut never optimal', 'green cut optimal'))

    report.findings = {'terminal_green_checked': terminal_checked}
    return _finish(report, started)


def verify_strategy(max_edges_exhaustive: int, seed: int = 42,
                    string_edges: Optional[int] = None, graph_vertices: int = 4,
                    max_examples: int = 20, progress: bool = False) -> VerificationReport:
    """With R >= B and a grounded Blue edge, some grounded Blue cut is optimal for Left

    The stronger readings (every grounded Blue cut wins; the lowest-id one
    wins) are tallied as findings rather than mismatches.
    """
    bounds = SuiteBounds(max_edges_exhaustive, string_edges, graph_vertices, seed=seed)
    report = VerificationReport('strategy', bounds.as_dict(), seed)
    started = time.perf_counter()
    applicable = 0
    not_every_cut: List[str] = []
    lowest_not_optimal: List[str] = []
    not_every_total = lowest_total = 0

    for text, position in _progress(suite_positions(bounds, include_random=False),
                                    'strategy', progress):
        report.positions_checked += 1
        counts = grounded_counts(position)
        if counts.blue == 0 or counts.red < counts.blue:
            continue
        applicable += 1

        best = {move.edge_id for move in
                SearchSession(position, PlayConvention.MISERE).optimal_moves(Player.LEFT)}
        grounded_blue = {edge.id for edge in position.edges
                         if edge.color is Color.BLUE and position.is_grounded(edge)}

        if not grounded_blue & best:
            report.mismatches.append(Mismatch(text, 'strategy', 'a grounded blue cut is optimal',
                                              f"optimal moves {sorted(best)}"))
        if not grounded_blue <= best:
            not_every_total += 1
            if len(not_every_cut) < max_examples:
                not_every_cut.append(text)
        chosen = proof_strategy_move(position, Player.LEFT)
        if chosen is not None and chosen.edge_id not in best:
            lowest_total += 1
            if len(lowest_not_optimal) < max_examples:
                lowest_not_optimal.append(text)

    if not_every_total:
        logger.warning(f"{not_every_total} positions where some grounded blue cut loses")
    report.findings = {
        'applicable_positions': applicable,
        'some_grounded_blue_cut_loses': not_every_total,
        'some_grounded_blue_cut_loses_examples': not_every_cut,
        'lowest_id_cut_loses': lowest_total,
        'lowest_id_cut_loses_examples': lowest_not_optimal,
    }
    return _finish(report, started)


def verify_duality(max_edges_exhaustive: int, seed: int = 42,
                   string_edges: Optional[int] = None, graph_vertices: int = 4,
                   colors: Sequence[Color] = RED_BLUE,
                   progress: bool = False) -> VerificationReport:
    """Color-swap duality and memo on/off equality under both conventions"""
    bounds = SuiteBounds(max_edges_exhaustive, string_edges, graph_vertices, seed=seed)
    report = VerificationReport('duality', {**bounds.as_dict(),
                                            'colors': "".join(c.value for c in colors)}, seed)
    started = time.perf_counter()

    for text, position in _progress(suite_positions(bounds, colors, include_random=False),
                                    'duality', progress):
        report.positions_checked += 1
        swapped = swap_colors(position)
        for conv in PlayConvention:
            result: OutcomeClass = outcome(position, conv)
            mirrored = outcome(swapped, conv)
            if mirrored is not result.swapped:
                report.mismatches.append(Mismatch(text, f'duality/{conv.value}',
                                                  result.swapped.value, mirrored.value))
            unmemoized = outcome(position, conv, memoize=False)
            if unmemoized is not result:
                report.mismatches.append(Mismatch(text, f'memo/{conv.value}',
                                                  result.value, unmemoized.value))

    return _finish(report, started)
