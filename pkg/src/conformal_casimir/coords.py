"""Rindler and Minkowski coordinates on the right wedge, mirror worldlines.

Natural units (hbar = c = 1). The Rindler chart is

    chi = sqrt(x^2 - t^2),    tau = atanh(t / x) / a,

so ``ds^2 = (a chi)^2 dtau^2 - dchi^2`` and a worldline ``chi = const`` has
proper acceleration ``1 / chi``. The parameter ``a`` only rescales ``tau``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class RindlerPoint:
    tau: float
    chi: float

    def __post_init__(self):
        if not self.chi > 0:
            raise DomainError(f"chi must be positive (right wedge), got {self.chi}")


@dataclass(frozen=True)
class MinkowskiPoint:
    t: float
    x: float


@dataclass(frozen=True)
class CavityConfig:
    """Two Dirichlet mirrors at ``chi = A`` and ``chi = B`` in the Rindler chart of parameter ``a``."""

    a: float
    A: float
    B: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0):
            raise DomainError(f"Rindler parameter a must be positive, got {self.a}")
        if not (math.isfinite(self.A) and self.A > 0):
            raise DomainError(f"mirror position A must be positive, got {self.A}")
        if not (math.isfinite(self.B) and self.B > self.A):
            raise DomainError(f"need 0 < A < B, got A={self.A}, B={self.B}")

    @classmethod
    def from_length(cls, a: float, A: float, L: float) -> "CavityConfig":
        return cls(a, A, A + L)

    @property
    def L(self) -> float:
        return self.B - self.A

    @property
    def log_ratio(self) -> float:
        """``log(B/A)``, the conformal length of the cavity times ``a``."""
        return math.log(self.B / self.A)

    def position(self, plate: str) -> float:
        if plate == "A":
            return self.A
        if plate == "B":
            return self.B
        raise DomainError(f"plate must be 'A' or 'B', got {plate!r}")

    def acceleration(self, plate: str) -> float:
        return 1.0 / self.position(plate)


def rindler_from_minkowski(p: MinkowskiPoint, a: float) -> RindlerPoint:
    if not a > 0:
        raise DomainError(f"a must be positive, got {a}")
    if not p.x > abs(p.t):
        raise DomainError(f"({p.t}, {p.x}) is outside the right Rindler wedge")
    # (x - t)(x + t) avoids cancellation near the horizon
    chi = math.sqrt((p.x - p.t) * (p.x + p.t))
    return RindlerPoint(math.atanh(p.t / p.x) / a, chi)


def minkowski_from_rindler(p: RindlerPoint, a: float) -> MinkowskiPoint:
    if not a > 0:
        raise DomainError(f"a must be positive, got {a}")
    u = a * p.tau
    return MinkowskiPoint(p.chi * math.sinh(u), p.chi * math.cosh(u))


def trajectory(acc: float, t: float) -> tuple[float, float]:
    """Position and velocity at inertial time ``t`` of a mirror with proper acceleration ``acc``.

    The mirror is at rest at ``x = 1/acc`` when ``t = 0``.
    """
    if not acc > 0:
        raise DomainError(f"proper acceleration must be positive, got {acc}")
    x = math.sqrt(1.0 / acc**2 + t**2)
    v = acc * t / math.sqrt(1.0 + (acc * t) ** 2)
    return x, v


def conformal_coordinate(chi: float, a: float) -> float:
    """``xi`` with ``chi = exp(a xi) / a``, making the metric ``exp(2 a xi)(dtau^2 - dxi^2)``."""
    if not chi > 0:
        raise DomainError(f"chi must be positive, got {chi}")
    if not a > 0:
        raise DomainError(f"a must be positive, got {a}")
    return math.log(a * chi) / a


def chi_from_conformal(xi: float, a: float) -> float:
    if not a > 0:
        raise DomainError(f"a must be positive, got {a}")
    return math.exp(a * xi) / a


def plate_velocity(tau: float, a: float) -> float:
    """Inertial-frame velocity of any ``chi = const`` mirror at Rindler time ``tau``."""
    return math.tanh(a * tau)
