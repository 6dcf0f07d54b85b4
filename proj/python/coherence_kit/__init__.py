"""Coherence resource theory toolkit.

Density matrices, pure states and Kraus operators are numpy arrays; a
channel is a list of Kraus matrices of shape (dout, din).
"""

from ._core import *  # noqa: F401,F403
from ._core import CoherenceError, PreconditionError, SolverError, ValidationError

__all__ = [name for name in dir() if not name.startswith("_")]
