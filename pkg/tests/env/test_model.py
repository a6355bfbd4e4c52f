import random
from dataclasses import replace
from statistics import fmean

import pytest

from freeway_oracle.detrng import CHICKEN_TAG, stream_init, stream_mix
from freeway_oracle.env.actions import Action
from freeway_oracle.env.config import GameConfig
from freeway_oracle.env.model import (
    car_x,
    collision_at,
    draw_step,
    game_length,
    iter_steps,
    lane_band,
    lanes_at,
    replay,
    replay_from,
    reset,
    step,
)
from freeway_oracle.exceptions import GameOverError, UsageError


def test_reset(config: GameConfig) -> None:
    state = reset(42, config)

    assert (state.seed, state.t, state.y, state.cooldown, state.score) == (42, 0, 6, 0, 0)
    assert state.chicken_stream == stream_init(42, CHICKEN_TAG)
    assert not state.last_step_flags.collided
    assert not state.last_step_flags.crossed


def test_cars_start_at_the_origin(config: GameConfig) -> None:
    for lane in range(config.lane_count):
        assert car_x(9, lane, 0, config) == 0


def test_car_positions_without_jitter(deterministic_config: GameConfig) -> None:
    assert car_x(0, 0, 10, deterministic_config) == 6
    assert car_x(0, 1, 8, deterministic_config) == 6
    assert car_x(0, 4, 10, deterministic_config) == 30
    assert car_x(0, 5, 10, deterministic_config) == 130
    assert car_x(0, 4, 60, deterministic_config) == 20


def test_car_positions_without_jitter_ignore_the_seed(deterministic_config: GameConfig) -> None:
    for t in range(0, 500, 13):
        for lane in range(deterministic_config.lane_count):
            assert car_x(0, lane, t, deterministic_config) == car_x(777, lane, t, deterministic_config)


def test_jitter_is_bounded(config: GameConfig, deterministic_config: GameConfig) -> None:
    for t in range(1, 400, 3):
        for lane in range(config.lane_count):
            x = car_x(5, lane, t, config)
            base = car_x(5, lane, t, deterministic_config)
            shift = (x - base) * config.directions[lane] % config.x_range

            assert 0 <= x < config.x_range
            assert 0 <= shift < config.jitter_amplitude


def test_car_positions_are_seed_dependent(config: GameConfig) -> None:
    assert any(car_x(0, 3, t, config) != car_x(1, 3, t, config) for t in range(1, 50))


def test_car_x_rejects_bad_arguments(config: GameConfig) -> None:
    with pytest.raises(UsageError):
        car_x(0, 10, 5, config)
    with pytest.raises(UsageError):
        car_x(0, 0, -1, config)


def test_lanes(config: GameConfig) -> None:
    assert lane_band(0, config) == (13, 29)
    assert lanes_at(6, config) == ()
    assert lanes_at(20, config) == (0,)
    assert lanes_at(29, config) == (0, 1)
    assert lanes_at(175, config) == ()

    with pytest.raises(UsageError):
        lane_band(-1, config)


def test_collision_matches_brute_force(config: GameConfig) -> None:
    for t in range(1, 300, 7):
        for y in range(config.y_min, config.y_cap + 1):
            expected = any(
                lo <= y <= hi and config.collide_x_lo <= car_x(3, lane, t, config) <= config.collide_x_hi
                for lane, (lo, hi) in enumerate(config.lane_bands)
            )
            assert collision_at(3, y, t, config) == expected


def test_no_collisions_on_the_strips(config: GameConfig) -> None:
    for t in range(500):
        for y in (6, 7, 12, 174, 175, 177):
            assert not collision_at(8, y, t, config)


def test_collision_rejects_out_of_bounds_y(config: GameConfig) -> None:
    with pytest.raises(UsageError):
        collision_at(0, 5, 1, config)
    with pytest.raises(UsageError):
        collision_at(0, 178, 1, config)


def test_game_length(config: GameConfig) -> None:
    lengths = {game_length(seed, config) for seed in range(200)}

    assert min(lengths) >= 2700
    assert max(lengths) < 2800
    assert len(lengths) > 1
    assert game_length(17, config) == game_length(17, config)


def test_up_steps_average_3_25(config: GameConfig) -> None:
    stream = stream_init(0, CHICKEN_TAG)
    sizes = []
    for i in range(20_000):
        stream = stream_mix(stream, i)
        sizes.append(draw_step(stream, config))

    assert set(sizes) == {2, 3, 4}
    assert abs(fmean(sizes) - 3.25) < 0.05


def test_deterministic_step(deterministic_config: GameConfig) -> None:
    state, result = step(reset(0, deterministic_config), Action.UP, deterministic_config)

    assert result.new_y == state.y == 9
    assert result.t_after == state.t == 1


def test_stay_and_down_at_the_start(config: GameConfig) -> None:
    start = reset(4, config)

    stayed, _ = step(start, Action.STAY, config)
    went_down, _ = step(start, Action.DOWN, config)

    assert stayed.y == went_down.y == config.y_min
    assert stayed.t == went_down.t == 1
    assert stayed.chicken_stream != went_down.chicken_stream


def test_step_sizes_depend_on_history(config: GameConfig) -> None:
    differs = False
    for seed in range(20):
        after_down = replay(seed, [Action.DOWN], config)
        after_stay = replay(seed, [Action.STAY], config)
        assert (after_down.t, after_down.y) == (after_stay.t, after_stay.y)

        _, up_after_down = step(after_down, Action.UP, config)
        _, up_after_stay = step(after_stay, Action.UP, config)
        differs = differs or up_after_down.new_y != up_after_stay.new_y

    assert differs


def test_step_does_not_change_the_input_state(config: GameConfig) -> None:
    state = reset(0, config)

    step(state, Action.UP, config)

    assert state == reset(0, config)


def test_step_accepts_integer_codes(config: GameConfig) -> None:
    assert step(reset(0, config), 1, config) == step(reset(0, config), Action.UP, config)

    with pytest.raises(UsageError):
        step(reset(0, config), 7, config)


def test_crossing_resets_the_chicken(deterministic_config: GameConfig) -> None:
    state = replay(0, [Action.UP] * 56, deterministic_config)
    assert state.y == 174

    state, result = step(state, Action.UP, deterministic_config)

    assert result.crossed
    assert not result.collided
    assert result.new_y == 177
    assert (state.y, state.cooldown, state.score) == (6, 8, 1)
    assert state.last_step_flags.crossed


def test_collision_knocks_back_and_freezes(config: GameConfig) -> None:
    state = reset(0, config)
    end = game_length(0, config)
    hit = None
    while state.t < end:
        before = state
        state, result = step(state, Action.UP, config)
        if result.collided:
            hit = (before, state, result)
            break

    assert hit is not None
    before, after, result = hit
    assert after.y == max(config.y_min, result.new_y - config.knockback)
    assert after.cooldown == config.cool_hit
    assert after.score == before.score
    assert after.last_step_flags.collided


def test_cooldown_freezes_movement(config: GameConfig) -> None:
    state = reset(1, config)
    seen_cooldown = 0

    for _ in range(600):
        cooldown = state.cooldown
        y = state.y
        state, result = step(state, Action.UP, config)
        if cooldown > 0:
            seen_cooldown += 1
            assert result.new_y == y
            if not result.collided:
                assert state.cooldown == cooldown - 1

    assert seen_cooldown > 0


def test_y_stays_in_bounds(config: GameConfig) -> None:
    state = reset(12, config)
    pattern = [Action.UP, Action.UP, Action.DOWN, Action.STAY, Action.UP, Action.DOWN, Action.DOWN]

    for i in range(1000):
        state, result = step(state, pattern[(i * 7 + i // 3) % len(pattern)], config)
        assert config.y_min <= result.new_y <= config.y_cap
        assert config.y_min <= state.y < config.y_cross


def test_step_after_the_end_fails(config: GameConfig) -> None:
    end = game_length(0, config)
    state = replace(reset(0, config), t=end - 1)

    last, _ = step(state, Action.STAY, config)

    assert last.t == end
    with pytest.raises(GameOverError):
        step(last, Action.STAY, config)


def test_replay_composes(config: GameConfig) -> None:
    first = [Action.UP] * 30 + [Action.STAY] * 5
    second = [Action.DOWN, Action.UP, Action.UP] * 10

    assert replay(2, first + second, config) == replay_from(replay(2, first, config), second, config)


def test_iter_steps_yields_every_state(config: GameConfig) -> None:
    steps = list(iter_steps(reset(0, config), [Action.UP] * 10, config))

    assert [s.t for s, _ in steps] == list(range(1, 11))
    assert steps[-1][0] == replay(0, [Action.UP] * 10, config)


def test_lane_average_speeds(config: GameConfig) -> None:
    horizon = 1000
    for lane, speed in enumerate(config.speeds):
        travelled = 0
        previous = car_x(21, lane, 0, config)
        for t in range(1, horizon + 1):
            x = car_x(21, lane, t, config)
            # wrap each step's displacement into [-80, 80)
            travelled += ((x - previous) * config.directions[lane] + 80) % config.x_range - 80
            previous = x

        assert abs(travelled / horizon - speed) < 0.05


@pytest.mark.slow
def test_distinct_histories_at_the_same_position_diverge(config: GameConfig) -> None:
    rng = random.Random(2024)
    pairs = 0
    diverged = 0

    while pairs < 1000:
        seed = rng.randrange(1_000_000)
        length = rng.randint(1, 40)
        # STAY and DOWN both keep the chicken on the bottom strip, so both prefixes end at (length, 6)
        first = [rng.choice((Action.STAY, Action.DOWN)) for _ in range(length)]
        second = [rng.choice((Action.STAY, Action.DOWN)) for _ in range(length)]
        if first == second:
            continue
        pairs += 1

        a = replay(seed, first, config)
        b = replay(seed, second, config)
        assert (a.t, a.y) == (b.t, b.y) == (length, config.y_min)

        diverged += step(a, Action.UP, config)[1].new_y != step(b, Action.UP, config)[1].new_y

    assert diverged > 0
