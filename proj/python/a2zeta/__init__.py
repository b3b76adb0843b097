"""Exact zeta functions of finite A2 complexes and regular graphs."""

from ._a2zeta import *  # noqa: F401,F403
from ._a2zeta import Error

__all__ = [name for name in dir() if not name.startswith("_")]
