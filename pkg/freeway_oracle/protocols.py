"""
Protocols defining types
"""

from typing import Protocol

from freeway_oracle.env.actions import Action
from freeway_oracle.env.model import GameState


# pylint: disable=too-few-public-methods
class Agent(Protocol):
    """Defines an Agent protocol, anything that can pick the next action from the current game state can play a
    game through `run_agent`. The always-up baseline is the simplest agent
    """

    def act(self, state: GameState) -> Action:
        """Choose the action for the next timestep"""
        ...
