"""Exact engine for the local Gromov-Witten theory of curves.

Partition functions of a rank-2 equivariant bundle over a genus-g curve
are computed as exact rational functions of the equivariant parameters
(t1, t2) and the quantum variable q = -s^2, where s = e^{iu/2}.
"""

from .backend import BACKEND
from .partitions import Partition, all_partitions
from .scalar import Scalar, USeries, expand_u_series, specialize
from .tqft import LocalCurveQuery, evaluate, get_pants, reconstruct_pants

__all__ = [
    "BACKEND",
    "Partition",
    "all_partitions",
    "Scalar",
    "USeries",
    "expand_u_series",
    "specialize",
    "LocalCurveQuery",
    "evaluate",
    "get_pants",
    "reconstruct_pants",
]

__version__ = "0.1.0"
