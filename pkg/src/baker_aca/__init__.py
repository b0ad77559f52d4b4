"""Discrete baker transformation calculus for additive cellular automata on finite cylinders."""

from .baker import (
    BakerProfile,
    baker,
    baker_iter,
    baker_matrix,
    boxtimes,
    compress,
    critical,
    fixed_rules,
    index_baker,
    iota,
    is_swept,
    ord2,
    profile,
)
from .config import CapExceeded, Limits
from .gf2 import BitVec, GF2Matrix, circulant, det2, kernel_basis, rank2

__version__ = "0.1.0"
