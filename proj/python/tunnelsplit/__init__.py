"""Tunneling splittings in asymmetric one-dimensional double wells."""

from ._core import *  # noqa: F401,F403
from ._core import TunnelsplitError, run_cli  # noqa: F401

__version__ = "0.1.0"
