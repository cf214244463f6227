"""Diagonal quasi-symmetric functions, Temperley-Lieb harmonics, and exact
bigraded Hilbert matrix computations.

Bicompositions are written "a1,a2,../b1,b2,.." (top row / bottom row), with
"-" for the empty one; permutations use one-line notation "3 1 4 2".
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401
