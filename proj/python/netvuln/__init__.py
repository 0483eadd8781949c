"""Fractal-dimension-weighted vulnerability index for undirected networks.

Everything lives in the compiled extension; this package just re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
