"""Finite topology laboratory: explicit spaces, separation witnesses,
quotients, the open-open game, and witness transfer."""

from fintop._core import *  # noqa: F401,F403
from fintop._core import __version__  # noqa: F401
