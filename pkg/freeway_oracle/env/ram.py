"""
128-byte RAM-style observation
"""

from freeway_oracle.env.config import GameConfig
from freeway_oracle.env.model import GameState, car_x

RAM_SIZE = 128
RAM_CHICKEN_Y = 14
RAM_COOLDOWN = 106
RAM_CAR_X = 108


def encode_ram(state: GameState, config: GameConfig) -> bytes:
    """
    Observation with the bytes the Atari game exposes for Freeway: chicken Y at 14, cooldown at 106 and the ten car
    X positions at 108-117. Every other byte is zero.
    """
    ram = bytearray(RAM_SIZE)
    ram[RAM_CHICKEN_Y] = state.y
    ram[RAM_COOLDOWN] = min(state.cooldown, 255)
    for lane in range(config.lane_count):
        ram[RAM_CAR_X + lane] = car_x(state.seed, lane, state.t, config)
    return bytes(ram)
