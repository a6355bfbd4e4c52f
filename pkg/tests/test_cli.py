from pathlib import Path

import orjson
import pytest

from freeway_oracle.cli import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE_ERROR, parse_seed_range, run
from freeway_oracle.env.actions import Action
from freeway_oracle.env.config import GameConfig
from freeway_oracle.experiments.games import build_trace
from freeway_oracle.trace_io.dataset import read_results
from freeway_oracle.trace_io.trace import read_trace, verify_trace, write_trace


@pytest.fixture
def short_config_file(tmp_path: Path) -> Path:
    path = tmp_path / "settings.json"
    path.write_bytes(orjson.dumps({"game": {"deterministic_mode": True, "game_len_base": 400, "game_len_spread": 1}}))
    return path


def test_parse_seed_range() -> None:
    assert parse_seed_range("0..3") == [0, 1, 2, 3]
    assert parse_seed_range("5,1,9") == [5, 1, 9]


def test_solve_deterministic(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["solve", "--seed", "0", "--deterministic-mode"]) == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "length\t57"
    assert lines[1] == "actions\t" + "1" * 57


def test_common_flags_before_the_command(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["--deterministic-mode", "solve", "--seed", "3"]) == EXIT_OK

    assert "length\t57" in capsys.readouterr().out


def test_solve_writes_the_search_graph(tmp_path: Path) -> None:
    graph = tmp_path / "graph.csv"

    assert run(["solve", "--seed", "0", "--deterministic-mode", "--graph-out", str(graph)]) == EXIT_OK
    assert graph.read_text(encoding="utf-8").startswith("t,y,kind,on_path\n")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["solve"],
        ["solve", "--seed", "0", "--start-t", "999999"],
        ["solve", "--seed", "0", "--start-t", "-1"],
        ["--workers", "0", "baseline"],
        ["dataset", "--n", "0", "--out", "x.csv"],
        ["play"],
        ["baseline", "--seeds", "a..b"],
        ["frobnicate"],
    ],
)
def test_usage_errors(argv: list) -> None:
    assert run(argv) == EXIT_USAGE_ERROR


def test_invalid_config_file(tmp_path: Path) -> None:
    path = tmp_path / "settings.json"
    path.write_text('{"game": {"lanes": 3}}', encoding="utf-8")

    assert run(["--config", str(path), "solve", "--seed", "0"]) == EXIT_USAGE_ERROR


def test_print_config(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["--print-config"]) == EXIT_OK
    settings = orjson.loads(capsys.readouterr().out)
    assert settings["game"]["deterministic_mode"] is False
    assert settings["search"]["rollout"] is True

    assert run(["--deterministic-mode", "--no-rollout", "--print-config"]) == EXIT_OK
    settings = orjson.loads(capsys.readouterr().out)
    assert settings["game"]["deterministic_mode"] is True
    assert settings["search"]["rollout"] is False


def test_print_config_with_a_config_file(capsys: pytest.CaptureFixture[str], short_config_file: Path) -> None:
    assert run(["--config", str(short_config_file), "--print-config"]) == EXIT_OK

    assert orjson.loads(capsys.readouterr().out)["game"]["game_len_base"] == 400


def test_baseline(capsys: pytest.CaptureFixture[str], short_config_file: Path) -> None:
    assert run(["--config", str(short_config_file), "baseline", "--seeds", "0..2"]) == EXIT_OK

    out = capsys.readouterr().out
    table, distribution = out.split("\n\n")
    rows = table.splitlines()
    assert rows[0] == "seed\tscore"
    assert [row.split("\t")[0] for row in rows[1:]] == ["0", "1", "2"]
    assert distribution.splitlines()[0] == "score\tseeds"
    assert distribution.splitlines()[1].endswith("\t3")


def test_dataset_is_byte_identical(tmp_path: Path) -> None:
    argv = ["--deterministic-mode", "dataset", "--n", "2", "--sampling-seed", "5"]

    assert run([*argv, "--out", str(tmp_path / "a.csv")]) == EXIT_OK
    assert run([*argv, "--out", str(tmp_path / "b.csv"), "--workers", "2"]) == EXIT_OK

    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    assert len(read_results(tmp_path / "a.csv")) == 2


def test_dataset_resumes_from_the_store(tmp_path: Path) -> None:
    db = f"sqlite:///{tmp_path / 'runs.db'}"
    argv = ["--deterministic-mode", "dataset", "--n", "2", "--sampling-seed", "5", "--db", db]

    assert run([*argv, "--out", str(tmp_path / "a.csv")]) == EXIT_OK
    assert run([*argv, "--out", str(tmp_path / "b.csv")]) == EXIT_OK

    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_dataset_does_not_reuse_results_from_other_search_settings(tmp_path: Path) -> None:
    db = f"sqlite:///{tmp_path / 'runs.db'}"
    argv = ["dataset", "--n", "4", "--sampling-seed", "3"]

    assert run([*argv, "--db", db, "--out", str(tmp_path / "rollout.csv")]) == EXIT_OK
    assert run(["--no-rollout", *argv, "--db", db, "--out", str(tmp_path / "stored.csv")]) == EXIT_OK
    assert run(["--no-rollout", *argv, "--out", str(tmp_path / "fresh.csv")]) == EXIT_OK

    assert (tmp_path / "stored.csv").read_bytes() == (tmp_path / "fresh.csv").read_bytes()


def test_dataset_with_a_short_game_keeps_late_scenarios(tmp_path: Path, short_config_file: Path) -> None:
    out = tmp_path / "short.csv"

    argv = ["--config", str(short_config_file), "dataset", "--n", "6", "--sampling-seed", "1", "--out", str(out)]
    assert run(argv) == EXIT_OK

    results = read_results(out)
    assert len(results) == 6
    assert all(not r.solvable for r in results if r.spec.start_t >= 400)


def test_play_writes_a_valid_trace(tmp_path: Path, short_config_file: Path) -> None:
    out = tmp_path / "seed-0.json"
    y_series = tmp_path / "y.csv"

    argv = ["--config", str(short_config_file), "play", "--seed", "0", "--out", str(out), "--y-series", str(y_series)]
    assert run(argv) == EXIT_OK

    trace = read_trace(out)
    verify_trace(trace)
    assert trace.crossings[0].length == 57
    assert y_series.read_text(encoding="utf-8").startswith("t,y\n0,6\n")


def test_play_several_seeds_into_a_directory(tmp_path: Path, short_config_file: Path) -> None:
    out = tmp_path / "games"

    assert run(["--config", str(short_config_file), "play", "--seeds", "0,1", "--out", str(out)]) == EXIT_OK

    assert sorted(p.name for p in out.iterdir()) == ["seed-0.json", "seed-1.json"]


def test_render(tmp_path: Path, capsys: pytest.CaptureFixture[str], short_config: GameConfig) -> None:
    path = tmp_path / "trace.json"
    write_trace(build_trace(0, [Action.UP] * 30, short_config), path)

    assert run(["render", "--trace", str(path), "--t", "10"]) == EXIT_OK
    frame = capsys.readouterr().out.splitlines()
    assert frame[0].startswith("t=10 y=36")
    assert len(frame) == 13

    assert run(["render", "--trace", str(path), "--t", "31"]) == EXIT_USAGE_ERROR


def test_render_missing_trace(tmp_path: Path) -> None:
    assert run(["render", "--trace", str(tmp_path / "missing.json"), "--t", "0"]) == EXIT_DOMAIN_ERROR


def test_render_corrupt_trace(tmp_path: Path) -> None:
    path = tmp_path / "trace.json"
    path.write_text("{}", encoding="utf-8")

    assert run(["render", "--trace", str(path), "--t", "0"]) == EXIT_DOMAIN_ERROR
