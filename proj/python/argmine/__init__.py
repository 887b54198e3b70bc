"""Argument graph mining: transform text into argument graphs and score
them against benchmark graphs."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
