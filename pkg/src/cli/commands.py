"""
Command-line front end
Parsing, solving, classification, reduction, verification, enumeration,
exploration and benchmarking
"""

import argparse
import logging
import sys
import time
from dataclasses import asdict, replace
from typing import Any, Callable, Dict, List, Optional, TextIO

import colorama
from colorama import Fore

from src.config.manager import ConfigManager, VerifyConfig
from src.config.presets import PresetManager
from src.enumeration.explorer import explore_green_strings
from src.enumeration.generators import ShapeClass, enumerate_positions, parse_colors, random_position
from src.enumeration.verify import verify_duality, verify_reduction, verify_strategy, verify_theorem1
from src.game.errors import HackenbushError
from src.game.position import (
    Player,
    Position,
    grounded_counts,
    load_position,
    save_position,
    serialize_position,
)
from src.reduction.transform import merge_ground, to_misere_instance
from src.solver.classifier import classify_misere_rb, proof_strategy_move
from src.solver.search import PlayConvention, solve
from src.cli.schema import validate_document
from src.utils.logging_setup import setup_logging
from src.utils.report_format import dump_document, format_report, format_table, paint

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2

VERIFY_SUITES = ('theorem1', 'reduction', 'strategy', 'duality')


class UsageError(HackenbushError):
    """Invalid command line"""


class _ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as exceptions so they map to exit code 1"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class CommandContext:
    """Streams and configuration shared by the command handlers"""

    def __init__(self, args: argparse.Namespace, stdout: TextIO, stderr: TextIO):
        self.args = args
        self.stdout = stdout
        self.stderr = stderr
        self.config_manager = ConfigManager(args.config_dir)
        self.config = self.config_manager.load_config(args.config)
        self.presets = PresetManager(self.config_manager)
        self.color = hasattr(stdout, 'isatty') and stdout.isatty()

    def emit(self, document: Dict[str, Any], text: str):
        """Write the JSON document with --json, the text otherwise"""
        if getattr(self.args, 'json', False):
            problems = validate_document(document)
            for problem in problems:
                logger.error(f"Output schema violation: {problem}")
            self.stdout.write(dump_document(document))
        else:
            self.stdout.write(text)


def _moves_text(moves) -> str:
    return ", ".join(str(move.edge_id) for move in moves) if moves else "none"


def _flat(text: str) -> str:
    return text.strip().replace("\n", "; ")


# --- handlers ---------------------------------------------------------------

def cmd_solve(ctx: CommandContext) -> int:
    args = ctx.args
    position = load_position(args.file)
    convention = PlayConvention(args.play)
    memoize = ctx.config.solver.memoize and not args.no_memo
    report = solve(position, convention, memoize=memoize)

    document = {
        'command': 'solve',
        'inputs': {'file': str(args.file), 'play': convention.value,
                   'edges': len(position.edges), 'memoize': memoize},
        'outcome': report.outcome.value,
        'winners': {f"{mover.name.lower()}_first": report.winners[mover].value
                    for mover in Player},
        'moves': {mover.value: [move.edge_id for move in report.optimal_moves[mover]]
                  for mover in Player},
        'stats': report.stats.as_dict(),
    }
    stats = report.stats
    text = (
        f"position: {args.file} ({len(position.edges)} edges)\n"
        f"play: {convention.value}\n"
        f"outcome: {paint(report.outcome.value, Fore.CYAN, ctx.color)}\n"
        f"Left moving first: {report.winners[Player.LEFT].name.title()} wins\n"
        f"Right moving first: {report.winners[Player.RIGHT].name.title()} wins\n"
        f"optimal first moves (edge ids):\n"
        f"  Left: {_moves_text(report.optimal_moves[Player.LEFT])}\n"
        f"  Right: {_moves_text(report.optimal_moves[Player.RIGHT])}\n"
        f"stats: nodes={stats.nodes_expanded} memo_hits={stats.memo_hits} "
        f"lookups={stats.lookups} max_depth={stats.max_depth}\n"
    )
    ctx.emit(document, text)
    return EXIT_OK


def cmd_classify(ctx: CommandContext) -> int:
    args = ctx.args
    position = load_position(args.file)
    result = classify_misere_rb(position)
    counts = grounded_counts(position)
    strategy = {mover: proof_strategy_move(position, mover) for mover in Player}

    document = {
        'command': 'classify',
        'inputs': {'file': str(args.file), 'edges': len(position.edges)},
        'outcome': result.value,
        'grounded': counts.as_dict(),
        'moves': {mover.value: (move.edge_id if move else None)
                  for mover, move in strategy.items()},
    }
    text = (
        f"position: {args.file} ({len(position.edges)} edges)\n"
        f"grounded blue: {counts.blue}, grounded red: {counts.red}\n"
        f"misere outcome: {paint(result.value, Fore.CYAN, ctx.color)}\n"
        f"grounded-edge strategy move:\n"
        f"  Left: {_moves_text([strategy[Player.LEFT]] if strategy[Player.LEFT] else [])}\n"
        f"  Right: {_moves_text([strategy[Player.RIGHT]] if strategy[Player.RIGHT] else [])}\n"
    )
    ctx.emit(document, text)
    return EXIT_OK


def _transform(ctx: CommandContext, command: str,
               transform: Callable[[Position], Position]) -> int:
    args = ctx.args
    position = load_position(args.file)
    result = transform(position)
    text = serialize_position(result)
    if args.output:
        save_position(result, args.output)

    document = {
        'command': command,
        'inputs': {'file': str(args.file), 'output': args.output},
        'position': text,
        'edges': len(result.edges),
    }
    if args.output and not args.json:
        ctx.stdout.write(f"wrote {len(result.edges)} edges to {args.output}\n")
    else:
        ctx.emit(document, text)
    return EXIT_OK


def cmd_reduce(ctx: CommandContext) -> int:
    return _transform(ctx, 'reduce', to_misere_instance)


def cmd_merge_ground(ctx: CommandContext) -> int:
    return _transform(ctx, 'merge-ground', merge_ground)


def _verify_config(ctx: CommandContext) -> VerifyConfig:
    """Defaults < config file < preset < flags"""
    args = ctx.args
    config = ctx.config.verify
    if args.preset:
        config = ctx.presets.load_preset(args.preset, config)
    overrides = {
        'max_edges': args.max_edges,
        'string_edges': args.string_edges,
        'graph_vertices': args.graph_vertices,
        'random_trials': args.random,
        'random_edges': args.rand_edges,
        'random_vertices': args.rand_vertices,
        'seed': args.seed,
    }
    return replace(config, **{key: value for key, value in overrides.items() if value is not None})


def cmd_verify(ctx: CommandContext) -> int:
    args = ctx.args
    config = _verify_config(ctx)
    common = dict(seed=config.seed, string_edges=config.string_edges,
                  graph_vertices=config.graph_vertices, progress=args.progress)

    if args.suite == 'theorem1':
        report = verify_theorem1(config.max_edges, config.random_trials, config.random_edges,
                                 random_vertices=config.random_vertices, **common)
    elif args.suite == 'reduction':
        report = verify_reduction(config.max_edges, config.random_trials, config.random_edges,
                                  random_vertices=config.random_vertices, **common)
    elif args.suite == 'strategy':
        report = verify_strategy(config.max_edges, max_examples=config.max_examples, **common)
    else:
        report = verify_duality(config.max_edges, colors=parse_colors(args.colors), **common)

    document = {
        'command': 'verify',
        'inputs': {'suite': args.suite, 'preset': args.preset},
        'report': report.to_dict(include_timing=args.timing),
    }
    ctx.emit(document, format_report(report, color=ctx.color, timing=args.timing))
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_enumerate(ctx: CommandContext) -> int:
    args = ctx.args
    shape = ShapeClass(args.shape)
    palette = parse_colors(args.colors)
    texts = [serialize_position(position) for position in
             enumerate_positions(shape, args.max_edges, palette, max_vertices=args.max_vertices)]

    document = {
        'command': 'enumerate',
        'inputs': {'shape': shape.value, 'max_edges': args.max_edges,
                   'colors': "".join(color.value for color in palette),
                   'max_vertices': args.max_vertices},
        'count': len(texts),
        'positions': texts,
    }
    chunks = [f"# position {index}\n{text}" for index, text in enumerate(texts)]
    ctx.emit(document, "\n".join(chunks) + f"# {len(texts)} positions\n")
    return EXIT_OK


def cmd_explore(ctx: CommandContext) -> int:
    args = ctx.args
    max_edges = ctx.config.explore.max_edges if args.max_edges is None else args.max_edges
    strict = args.strict_green or ctx.config.explore.strict_green
    rows = explore_green_strings(max_edges, strict_green=strict)

    document = {
        'command': 'explore',
        'inputs': {'family': args.family, 'max_edges': max_edges, 'strict_green': strict},
        'count': len(rows),
        'rows': [row.as_dict() for row in rows],
    }
    table = format_table(('outcome', 'position'),
                         [(row.outcome.value, _flat(row.position)) for row in rows])
    ctx.emit(document, table + f"{len(rows)} positions\n")
    return EXIT_OK


def cmd_bench(ctx: CommandContext) -> int:
    args = ctx.args
    bench = ctx.config.bench
    edges = bench.edges if args.edges is None else args.edges
    vertices = bench.vertices if args.vertices is None else args.vertices
    seed = bench.seed if args.seed is None else args.seed
    letters = bench.colors if args.colors is None else args.colors
    palette = parse_colors(letters)

    position = random_position(edges, vertices, palette, seed, exact=True)
    outcomes, stats, timing = {}, {}, {}
    for convention in PlayConvention:
        started = time.perf_counter()
        report = solve(position, convention, memoize=not args.no_memo)
        timing[f"{convention.value}_seconds"] = round(time.perf_counter() - started, 3)
        outcomes[convention.value] = report.outcome.value
        stats[convention.value] = report.stats.as_dict()
        logger.info(f"Bench {convention.value}: {report.outcome.value} in "
                    f"{timing[f'{convention.value}_seconds']}s")

    document = {
        'command': 'bench',
        'inputs': {'edges': edges, 'vertices': vertices, 'colors': letters.upper(), 'seed': seed},
        'position': serialize_position(position),
        'outcomes': outcomes,
        'stats': stats,
        'timing': timing,
    }
    lines = [f"instance: {edges} edges over {vertices} vertices, colors {letters.upper()}, seed {seed}"]
    for convention in PlayConvention:
        s = stats[convention.value]
        lines.append(
            f"{convention.value}: outcome {outcomes[convention.value]}, "
            f"nodes={s['nodes_expanded']} memo_hits={s['memo_hits']} "
            f"time={timing[f'{convention.value}_seconds']:.3f}s")
    ctx.emit(document, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_presets(ctx: CommandContext) -> int:
    if ctx.args.install:
        written = ctx.presets.install_builtin_presets()
        logger.info(f"Installed {len(written)} presets into {ctx.presets.presets_dir}")
    entries = []
    for name in ctx.presets.get_preset_names():
        metadata = ctx.presets.get_preset_metadata(name)
        entries.append({'name': name, 'description': metadata.description,
                        'suites': metadata.suites})
    document = {'command': 'presets', 'presets': entries}
    text = "".join(f"{entry['name']}: {entry['description']}\n" for entry in entries)
    ctx.emit(document, text)
    return EXIT_OK


def cmd_show_config(ctx: CommandContext) -> int:
    config_dict = asdict(ctx.config)
    ctx.emit({'command': 'show-config', 'config': config_dict}, ctx.config_manager.dump_config())
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="hackenbush",
                             description="Hackenbush outcome solver and verification workbench")
    parser.add_argument("--config", type=str, help="Configuration file (YAML or JSON)")
    parser.add_argument("--config-dir", type=str, default="configs",
                        help="Directory holding config.yaml and presets/")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--quiet", action="store_true", help="Only log warnings and errors")
    parser.add_argument("--log-file", type=str, help="Also write logs to this file")

    output = _ArgumentParser(add_help=False)
    output.add_argument("--json", action="store_true", help="Emit a machine-readable document")

    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("solve", parents=[output], help="Exact outcome by search")
    p.add_argument("file")
    p.add_argument("--play", choices=[c.value for c in PlayConvention], default="normal")
    p.add_argument("--no-memo", action="store_true", help="Disable the memo table")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("classify", parents=[output], help="Misere Red-Blue formula")
    p.add_argument("file")
    p.set_defaults(handler=cmd_classify)

    for name, handler, help_text in (
            ("reduce", cmd_reduce, "Build the misere Red-Blue-Green instance"),
            ("merge-ground", cmd_merge_ground, "Merge ground vertices into one")):
        p = sub.add_parser(name, parents=[output], help=help_text)
        p.add_argument("file")
        p.add_argument("-o", "--output", type=str, help="Output position file (default stdout)")
        p.set_defaults(handler=handler)

    p = sub.add_parser("verify", parents=[output], help="Run a verification suite")
    p.add_argument("suite", choices=VERIFY_SUITES)
    p.add_argument("--preset", type=str, help="Named bound set from configs/presets")
    p.add_argument("--max-edges", type=int, help="Exhaustive graph bound")
    p.add_argument("--string-edges", type=int, help="Exhaustive string bound")
    p.add_argument("--graph-vertices", type=int, help="Non-ground vertices for graphs")
    p.add_argument("--random", type=int, help="Number of random trials")
    p.add_argument("--rand-edges", type=int, help="Edge bound of random trials")
    p.add_argument("--rand-vertices", type=int, help="Vertex bound of random trials")
    p.add_argument("--seed", type=int, help="Seed of the random trials")
    p.add_argument("--colors", type=str, default="BR", help="Palette for the duality suite")
    p.add_argument("--timing", action="store_true", help="Include wall time in the document")
    p.add_argument("--progress", action="store_true", help="Progress bar on stderr")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("enumerate", parents=[output], help="List positions of a shape class")
    p.add_argument("--shape", choices=[s.value for s in ShapeClass], required=True)
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--colors", type=str, default="BR")
    p.add_argument("--max-vertices", type=int, help="Non-ground vertices for graphs")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("explore", parents=[output], help="Outcome tables for open families")
    p.add_argument("family", choices=["green-strings"])
    p.add_argument("--max-edges", type=int)
    p.add_argument("--strict-green", action="store_true",
                   help="Green only at the grounded edge of each string")
    p.set_defaults(handler=cmd_explore)

    p = sub.add_parser("bench", parents=[output], help="Solve a seeded random instance")
    p.add_argument("--edges", type=int)
    p.add_argument("--vertices", type=int)
    p.add_argument("--colors", type=str)
    p.add_argument("--seed", type=int)
    p.add_argument("--no-memo", action="store_true")
    p.set_defaults(handler=cmd_bench)

    p = sub.add_parser("presets", parents=[output], help="List verification presets")
    p.add_argument("--install", action="store_true", help="Write built-in presets to disk")
    p.set_defaults(handler=cmd_presets)

    p = sub.add_parser("show-config", parents=[output], help="Print the effective configuration")
    p.set_defaults(handler=cmd_show_config)

    return parser


def _log_level(args: argparse.Namespace, configured: str) -> str:
    if args.debug:
        return "DEBUG"
    return "WARNING" if args.quiet else configured


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """Execute one command; returns the process exit code"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else argv
    colorama.just_fix_windows_console()

    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        stderr.write(f"error: {e}\n")
        return EXIT_ERROR
    except SystemExit as e:
        # --help
        return EXIT_OK if not e.code else EXIT_ERROR

    try:
        # config loading logs through the injected stream too
        setup_logging(_log_level(args, "INFO"), args.log_file, stream=stderr)
        ctx = CommandContext(args, stdout, stderr)
        setup_logging(_log_level(args, ctx.config.logging.level),
                      args.log_file or ctx.config.logging.file, stream=stderr)
        return args.handler(ctx)
    except (HackenbushError, OSError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        is_tty = hasattr(stderr, 'isatty') and stderr.isatty()
        stderr.write(paint(f"error: {e}", Fore.RED, is_tty) + "\n")
        return EXIT_ERROR
