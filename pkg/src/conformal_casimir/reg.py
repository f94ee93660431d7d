"""Regularization of "sum minus integral" differences for linear mode densities.

For a density ``f(n) = c n`` the difference

    sum_{n>=1} c n  -  int_0^inf c n dn

is finite once both sides carry the same regulator and the regulator is
removed at the end. Two regulated paths are implemented, plus the analytic
zeta value they must reproduce:

* ``exponential_damping``: weight ``exp(-eps n)``, extrapolated ``eps -> 0``
  by Richardson elimination of the even powers of ``eps``.
* ``euler_maclaurin_cutoff``: smooth cutoff ``exp(-(n / Lambda)^2)``; the
  Euler-Maclaurin remainder is a series in ``Lambda^-2``, removed the same way.
* ``zeta_oracle``: ``c * zeta(-1)``.

A sharp cutoff is deliberately not offered: with ``f(n) = c n`` it leaves a
remainder ``c Lambda / 2`` plus an oscillating term, so it has no limit.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError

# zeta(1 - n) = -B_n / n with B_2 = 1/6
ZETA_MINUS_ONE = float(-Fraction(1, 6) / 2)

METHODS = ("exponential_damping", "euler_maclaurin_cutoff", "zeta_oracle")


@dataclass(frozen=True)
class LinearModeDensity:
    c: float

    def __post_init__(self):
        if not math.isfinite(self.c):
            raise DomainError(f"density coefficient must be finite, got {self.c}")


@dataclass(frozen=True)
class RegularizationReport:
    value: float
    method: str
    cutoff_used: float | None
    extrapolation_error_estimate: float
    converged: bool = True
    levels: int = 0


def _damped_unit(eps: float) -> float:
    """sum_{n>=1} n e^{-eps n} - int_0^inf n e^{-eps n} dn, summed explicitly."""
    n_max = int(math.ceil(60.0 / eps))
    n = np.arange(1, n_max + 1, dtype=float)
    return math.fsum(n * np.exp(-eps * n)) - 1.0 / eps**2


def _gaussian_unit(cutoff: float) -> float:
    """Same difference with the smooth weight exp(-(n / cutoff)^2)."""
    n_max = int(math.ceil(8.0 * cutoff))
    n = np.arange(1, n_max + 1, dtype=float)
    return math.fsum(n * np.exp(-((n / cutoff) ** 2))) - cutoff**2 / 2.0


def richardson(values, ratio: float = 4.0) -> tuple[float, float]:
    """Neville-style elimination for a sequence whose error is a series in h^2, h halving.

    Returns the best estimate and the change contributed by the last column,
    which serves as an error estimate.
    """
    table = [list(values)]
    while len(table[-1]) > 1:
        prev = table[-1]
        k = len(table)
        f = ratio**k
        table.append([(f * prev[i + 1] - prev[i]) / (f - 1.0) for i in range(len(prev) - 1)])
    best = table[-1][0]
    if len(table) < 2:
        return best, math.inf
    return best, abs(best - table[-2][-1])


def _ladder(unit, start, levels, shrink):
    scales = [start * shrink**k for k in range(levels)]
    return scales, [unit(s) for s in scales]


def regularize_linear_difference(
    d: LinearModeDensity,
    method: str = "exponential_damping",
    *,
    eps0: float = 0.1,
    levels: int = 6,
) -> RegularizationReport:
    """Finite part of ``sum c n - int c n dn`` (equals ``-c / 12``).

    ``eps0`` is the coarsest damping strength; the cutoff variant starts at
    ``1 / eps0``. Each further level halves ``eps`` (doubles the cutoff).
    """
    if method not in METHODS:
        raise DomainError(f"unknown regularization method {method!r}")
    if method == "zeta_oracle":
        return RegularizationReport(d.c * ZETA_MINUS_ONE, method, None, 0.0, True, 0)
    if levels < 2:
        raise DomainError("Richardson extrapolation needs at least two levels")
    if d.c == 0.0:
        return RegularizationReport(0.0, method, None, 0.0, True, levels)

    if method == "exponential_damping":
        scales, raw = _ladder(_damped_unit, eps0, levels, 0.5)
        cutoff = 1.0 / scales[-1]
        biggest = 1.0 / scales[-1] ** 2
    else:
        scales, raw = _ladder(_gaussian_unit, 1.0 / eps0, levels, 2.0)
        cutoff = scales[-1]
        biggest = scales[-1] ** 2 / 2.0

    unit, change = richardson(raw)
    # rounding floor: the raw differences cancel two numbers of size `biggest`
    floor = 64.0 * sys.float_info.epsilon * biggest
    err = max(change, floor)
    converged = change < 1e-6
    return RegularizationReport(
        value=d.c * unit,
        method=method,
        cutoff_used=cutoff,
        extrapolation_error_estimate=abs(d.c) * err,
        converged=converged,
        levels=levels,
    )


def zeta_frequency_sum(omega1: float) -> float:
    """Zeta-regularized zero-point sum ``(1/2) sum_n n omega1``."""
    if not omega1 > 0:
        raise DomainError(f"fundamental frequency must be positive, got {omega1}")
    return 0.5 * omega1 * ZETA_MINUS_ONE
