"""Simplex lattice labelings, cell statistics and bounds, labeling search,
and measure geometry of simplex partitions."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
