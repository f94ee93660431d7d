"""Casimir forces and vacuum stress tensors in Rindler and conformally flat spacetimes.

Natural units (hbar = c = 1) throughout. Modules:

* :mod:`~conformal_casimir.coords` - Rindler charts, mirror trajectories
* :mod:`~conformal_casimir.reg` - regularized mode sums
* :mod:`~conformal_casimir.rindler_cavity` - 1+1D cavity between accelerated mirrors
* :mod:`~conformal_casimir.anomaly` - trace anomaly and the conformal transformation law
* :mod:`~conformal_casimir.cosmo` - FLRW curvature and the de Sitter Casimir force
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("artifact")
except PackageNotFoundError:  # running from a source tree
    __version__ = "0.1.0"

from .coords import CavityConfig, MinkowskiPoint, RindlerPoint
from .errors import BoundaryConditionError, DomainError
from .tensors import StressTensor2, StressTensor4
from .tolerances import TOL, Tolerances

__all__ = [
    "BoundaryConditionError",
    "CavityConfig",
    "DomainError",
    "MinkowskiPoint",
    "RindlerPoint",
    "StressTensor2",
    "StressTensor4",
    "TOL",
    "Tolerances",
    "__version__",
]
