"""Exact linking and intersection parity checks for point configurations.

Rational (and Q(sqrt 3)) coordinates only; every predicate is decided exactly.
"""
from ._accel import BACKEND
from .errors import *  # noqa: F401,F403
from .kernel import *  # noqa: F401,F403
from .simplex import *  # noqa: F401,F403
from .linking import *  # noqa: F401,F403
from .realizability import *  # noqa: F401,F403
from .partitions import *  # noqa: F401,F403
from .constructions import *  # noqa: F401,F403
from .verifiers import *  # noqa: F401,F403
from .scalar import QuadSqrt3, SQRT3

__version__ = "0.1.0"
