import pytest

from freeway_oracle.env.config import GameConfig


@pytest.fixture
def config() -> GameConfig:
    return GameConfig()


@pytest.fixture
def deterministic_config() -> GameConfig:
    return GameConfig(deterministic_mode=True)


@pytest.fixture
def short_config() -> GameConfig:
    # deterministic dynamics and a 400 step game, small enough to play whole games in unit tests
    return GameConfig(deterministic_mode=True, game_len_base=400, game_len_spread=1)
