"""
Command-line entry point.

```
freeway-oracle solve --seed 0 --start-t 0 --deterministic-mode
freeway-oracle play --seed 3 --out seed-3.json
freeway-oracle baseline --seeds 0..99 --workers 4
freeway-oracle dataset --n 500 --sampling-seed 7 --out scenarios.csv
freeway-oracle render --trace seed-3.json --t 120
```

Exit codes: 0 on success, 1 on domain errors (no crossing possible, bad files), 2 on usage errors.
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from statistics import fmean
from typing import Any, Callable, Dict, List, Optional, Sequence

import orjson
from pydantic import ValidationError

from freeway_oracle.env.actions import Action, encode_actions
from freeway_oracle.env.config import GameConfig, OracleSettings, SearchConfig
from freeway_oracle.env.model import game_length
from freeway_oracle.exceptions import FreewayOracleError, UsageError
from freeway_oracle.experiments.games import (
    DEFAULT_GAME_SEEDS,
    always_up_baseline,
    baseline_distribution,
    baseline_scores,
    play_games,
)
from freeway_oracle.experiments.scenarios import (
    length_histogram,
    sample_specs,
    solve_scenarios,
    summarize_dataset,
)
from freeway_oracle.experiments.types import ScenarioResult
from freeway_oracle.logger import configure_logging, log_search_progress
from freeway_oracle.oracle.astar import CrossingSearch
from freeway_oracle.store import DATABASE_URL_ENV, ResultStore, open_store
from freeway_oracle.trace_io.dataset import write_results
from freeway_oracle.trace_io.graph_export import write_search_graph
from freeway_oracle.trace_io.render import render_animation, render_ascii
from freeway_oracle.trace_io.trace import read_trace, write_trace, write_y_series

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

DEFAULT_HISTOGRAM_BIN = 10


def parse_seed_range(text: str) -> List[int]:
    """Parses `a..b` (inclusive) or a comma separated list of seeds"""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            seeds = list(range(int(lo), int(hi) + 1))
        else:
            seeds = [int(part) for part in text.split(",") if part]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid seed range {text!r}") from e

    if not seeds or min(seeds) < 0:
        raise argparse.ArgumentTypeError(f"invalid seed range {text!r}")
    return seeds


def _add_common_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # sub-commands use SUPPRESS so they never overwrite flags given before the sub-command name
    def default(value: Any) -> Any:
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--config", type=Path, default=default(None), help="JSON file with settings overrides")
    parser.add_argument(
        "--deterministic-mode",
        action="store_true",
        default=default(False),
        help="no car jitter and a fixed step of 3",
    )
    parser.add_argument("--no-rollout", action="store_true", default=default(False), help="disable up-rollouts")
    parser.add_argument("--workers", type=int, default=default(1), help="worker processes for batch commands")
    parser.add_argument("--print-config", action="store_true", default=default(False), help="print settings and exit")
    parser.add_argument("-v", "--verbose", action="count", default=default(0), help="-v for INFO, -vv for DEBUG")
    parser.add_argument("-q", "--quiet", action="store_true", default=default(False), help="only log errors")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for every sub-command"""
    parser = argparse.ArgumentParser(prog="freeway-oracle", description="Freeway crossing oracle and experiment harnesses")
    _add_common_flags(parser, suppress=False)
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        _add_common_flags(sub, suppress=True)
        return sub

    solve = command("solve", "fastest crossing from a (seed, start timestep) scenario")
    solve.add_argument("--seed", type=int, required=True)
    solve.add_argument("--start-t", type=int, default=0)
    solve.add_argument("--graph-out", type=Path, help="write the explored search graph as CSV")

    play = command("play", "play full games with the oracle")
    target = play.add_mutually_exclusive_group(required=True)
    target.add_argument("--seed", type=int)
    target.add_argument("--seeds", type=parse_seed_range)
    target.add_argument("--all", action="store_true", help="the default seed list: 0-4 and multiples of 50 to 1000")
    play.add_argument("--out", type=Path, help="trace file (one seed) or directory (several seeds)")
    play.add_argument("--y-series", type=Path, help="write t,y of a single game as CSV")
    play.add_argument("--db", help="results-store URL to save the games in")

    baseline = command("baseline", "always-up scores and their distribution")
    baseline.add_argument("--seeds", type=parse_seed_range, default=parse_seed_range("0..99"))

    dataset = command("dataset", "sample and solve single-crossing scenarios")
    dataset.add_argument("--n", type=int, required=True)
    dataset.add_argument("--sampling-seed", type=int, default=0)
    dataset.add_argument("--out", type=Path, required=True)
    dataset.add_argument("--db", help="results-store URL; scenarios already stored there are not solved again")
    dataset.add_argument("--histogram-bin", type=int, default=DEFAULT_HISTOGRAM_BIN)

    render = command("render", "text frames of a trace")
    render.add_argument("--trace", type=Path, required=True)
    frame = render.add_mutually_exclusive_group(required=True)
    frame.add_argument("--t", type=int)
    frame.add_argument("--animate", action="store_true")

    return parser


def load_settings(args: argparse.Namespace) -> OracleSettings:
    """Settings from the config file (if any) with the command-line switches applied"""
    settings = OracleSettings()
    if args.config is not None:
        settings = OracleSettings.model_validate_json(Path(args.config).read_bytes())

    game, search = settings.game, settings.search
    if args.deterministic_mode:
        game = GameConfig.model_validate({**game.model_dump(), "deterministic_mode": True})
    if args.no_rollout:
        search = SearchConfig.model_validate({**search.model_dump(), "rollout": False})

    return OracleSettings(game=game, search=search)


def _emit(*fields: Any) -> None:
    print("\t".join(str(f) for f in fields))


def _cmd_solve(args: argparse.Namespace, settings: OracleSettings) -> int:
    if not 0 <= args.start_t < game_length(args.seed, settings.game):
        raise UsageError(f"--start-t must lie within the game (0 to {game_length(args.seed, settings.game) - 1})")

    search = CrossingSearch(args.seed, [Action.STAY] * args.start_t, settings.game, settings.search)
    solution = search.run()
    if args.graph_out:
        write_search_graph(search.graph, args.graph_out, solution)

    _emit("length", solution.length)
    _emit("actions", encode_actions(solution.actions))
    _emit("nodes_expanded", solution.nodes_expanded)
    _emit("nodes_created", solution.nodes_created)
    return EXIT_OK


def _cmd_play(args: argparse.Namespace, settings: OracleSettings) -> int:
    if args.seed is not None:
        seeds = [args.seed]
    else:
        seeds = list(DEFAULT_GAME_SEEDS) if args.all else args.seeds

    traces = play_games(seeds, settings.game, settings.search, args.workers)

    db_url = args.db or os.environ.get(DATABASE_URL_ENV)
    store: Optional[ResultStore] = open_store(db_url) if db_url else None

    _emit("seed", "score", "always_up", "mean_crossing")
    for trace in traces:
        lengths = [c.length for c in trace.crossings]
        mean_crossing = f"{fmean(lengths):.2f}" if lengths else "-"
        _emit(trace.seed, trace.score, always_up_baseline(trace.seed, settings.game), mean_crossing)

        if args.out:
            if len(traces) == 1:
                write_trace(trace, args.out)
            else:
                args.out.mkdir(parents=True, exist_ok=True)
                write_trace(trace, args.out / f"seed-{trace.seed}.json")
        if store is not None:
            store.save_game(trace, settings.search)

    if args.y_series:
        if len(traces) != 1:
            raise UsageError("--y-series needs a single game")
        write_y_series(traces[0], args.y_series)

    if store is not None:
        store.close()
    return EXIT_OK


def _cmd_baseline(args: argparse.Namespace, settings: OracleSettings) -> int:
    scores = baseline_scores(args.seeds, settings.game, args.workers)

    _emit("seed", "score")
    for seed, score in scores:
        _emit(seed, score)

    print()
    _emit("score", "seeds")
    for score, count in baseline_distribution(scores):
        _emit(score, count)
    return EXIT_OK


def _cmd_dataset(args: argparse.Namespace, settings: OracleSettings) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")

    specs = sample_specs(args.n, args.sampling_seed)
    stored: List[ScenarioResult] = []
    db_url = args.db or os.environ.get(DATABASE_URL_ENV)
    store: Optional[ResultStore] = open_store(db_url) if db_url else None
    if store is not None:
        wanted = {s.sort_key for s in specs}
        stored = [r for r in store.load_scenarios(settings.game, settings.search) if r.spec.sort_key in wanted]
        done = {r.spec.sort_key for r in stored}
        specs = [s for s in specs if s.sort_key not in done]
        logger.info("%d scenarios already stored, %d to solve", len(stored), len(specs))

    solved = solve_scenarios(specs, settings.game, settings.search, args.workers)
    if store is not None:
        store.save_scenarios(solved, settings.game, settings.search)
        store.close()

    results = sorted(stored + solved, key=lambda r: r.spec.sort_key)
    write_results(results, args.out)

    summary = summarize_dataset(results)
    for key, value in summary.model_dump().items():
        _emit(key, "-" if value is None else value)

    print()
    _emit("bin", "count")
    for bin_lo, count in length_histogram([r for r in results if r.solvable], args.histogram_bin):
        _emit(bin_lo, count)
    return EXIT_OK


def _cmd_render(args: argparse.Namespace, settings: OracleSettings) -> int:
    trace = read_trace(args.trace)
    if args.animate:
        print("\n\n".join(render_animation(trace)))
    else:
        print(render_ascii(trace, args.t))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, OracleSettings], int]] = {
    "solve": _cmd_solve,
    "play": _cmd_play,
    "baseline": _cmd_baseline,
    "dataset": _cmd_dataset,
    "render": _cmd_render,
}


def _log_level(args: argparse.Namespace) -> int:
    if args.quiet:
        return logging.ERROR
    if args.verbose >= 2:
        return logging.DEBUG
    if args.verbose == 1:
        return logging.INFO
    return logging.WARNING


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Runs one command and returns its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR

    configure_logging(_log_level(args))
    if args.verbose:
        log_search_progress()

    try:
        settings = load_settings(args)
    except (OSError, ValidationError) as e:
        print(f"error: invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR

    if args.print_config:
        print(orjson.dumps(settings.model_dump(mode="json"), option=orjson.OPT_INDENT_2).decode())
        return EXIT_OK

    if args.command is None:
        parser.print_usage(sys.stderr)
        print("error: a command is required", file=sys.stderr)
        return EXIT_USAGE_ERROR

    if args.workers < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE_ERROR

    try:
        return COMMANDS[args.command](args, settings)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except (FreewayOracleError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR


def main() -> None:
    """Console-script entry point"""
    sys.exit(run())
