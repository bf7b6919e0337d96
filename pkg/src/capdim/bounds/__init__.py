"""Closed-form bound evaluators and their parameter record."""
from .formulas import *  # noqa: F401,F403
from .formulas import ChainSchedule
from .params import BoundParams

__all__ = [name for name in dir() if not name.startswith("_")]
