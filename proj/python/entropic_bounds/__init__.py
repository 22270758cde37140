"""Conditional entropic uncertainty bounds for two-qubit pure states.

All entropies are in nats. Angles are in radians.
"""

from ._core import *  # noqa: F401,F403
from ._core import DomainError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
