"""Casimir physics of a 1+1 dimensional cavity between uniformly accelerated mirrors.

Dirichlet mirrors sit at ``chi = A`` and ``chi = B``. The cavity modes

    psi_n ~ sin(n pi log(chi/A) / log(B/A)) exp(-i a n pi tau / log(B/A))

fix the frequencies ``omega_n = a n pi / log(B/A)``. Two force definitions
are implemented and deliberately kept apart:

* energy method: ``F = -dE_c/dB`` with the Killing energy of ``d_tau``;
  depends on the arbitrary chart parameter ``a``;
* pressure method: stress tensor contracted with ``d_chi`` and ``d_x`` at
  the plate; independent of ``a`` and boosted like a two-force in time.

They differ by the lapse ``a chi`` at the plate, which :func:`local_time_fix`
removes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import anomaly, coords, reg
from .coords import CavityConfig
from .errors import DomainError
from .tensors import StressTensor2
from .tolerances import TOL


class OutsideState(str, enum.Enum):
    RINDLER_VACUUM = "rindler_vacuum"
    MINKOWSKI_VACUUM = "minkowski_vacuum"

    @classmethod
    def parse(cls, value) -> "OutsideState":
        if isinstance(value, cls):
            return value
        aliases = {"rindler": cls.RINDLER_VACUUM, "minkowski": cls.MINKOWSKI_VACUUM}
        try:
            return aliases.get(value) or cls(value)
        except ValueError:
            raise DomainError(f"unknown outside state {value!r}") from None


@dataclass(frozen=True)
class CavityMode:
    n: int
    omega: float


@dataclass(frozen=True)
class TwoForce:
    f_t: float
    f_x: float

    def invariant(self) -> float:
        """``f_x^2 - f_t^2``, the squared rest-frame force."""
        return (self.f_x - self.f_t) * (self.f_x + self.f_t)


@dataclass(frozen=True)
class PressureForce:
    """Pressure-method force on one plate, with the outside-state term kept separate."""

    plate: str
    tau: float
    outside: OutsideState
    cavity: float
    outside_correction: float

    @property
    def total(self) -> float:
        return self.cavity + self.outside_correction


def _check_plate(plate: str) -> None:
    if plate not in ("A", "B"):
        raise DomainError(f"plate must be 'A' or 'B', got {plate!r}")


# -- modes and energy -------------------------------------------------------


def mode_frequency(cfg: CavityConfig, n: int) -> float:
    if int(n) != n or n < 1:
        raise DomainError(f"Dirichlet modes start at n = 1, got n = {n}")
    return cfg.a * n * math.pi / cfg.log_ratio


def cavity_mode(cfg: CavityConfig, n: int) -> CavityMode:
    return CavityMode(int(n), mode_frequency(cfg, n))


def energy_mode_density(cfg: CavityConfig) -> reg.LinearModeDensity:
    """Coefficient ``c`` with ``E_bare = sum c n - int c n dn`` after rescaling the continuum momentum."""
    return reg.LinearModeDensity(cfg.a * math.pi / (2.0 * cfg.log_ratio))


def casimir_energy(cfg: CavityConfig, method: str = "zeta") -> float:
    """Regularized Killing energy of the cavity vacuum, ``-a pi / (24 log(B/A))``.

    ``method``: ``"zeta"`` (zero-point sum over ``omega_n``), ``"damped"`` or
    ``"euler_maclaurin"`` (bare sum-minus-integral through :mod:`reg`), or
    ``"closed_form"``.
    """
    if method == "zeta":
        return reg.zeta_frequency_sum(mode_frequency(cfg, 1))
    if method == "damped":
        return reg.regularize_linear_difference(energy_mode_density(cfg)).value
    if method == "euler_maclaurin":
        return reg.regularize_linear_difference(
            energy_mode_density(cfg), "euler_maclaurin_cutoff"
        ).value
    if method == "closed_form":
        return -cfg.a * math.pi / (24.0 * cfg.log_ratio)
    raise DomainError(f"unknown energy method {method!r}")


# -- method I: energy derivative --------------------------------------------


def force_energy_method(cfg: CavityConfig, plate: str = "B", method: str = "analytic") -> float:
    """``-dE_c/dB`` (plate B) or ``-dE_c/dA`` (plate A)."""
    _check_plate(plate)
    if method == "analytic":
        ell2 = cfg.log_ratio**2
        if plate == "B":
            return -cfg.a * math.pi / (24.0 * cfg.B * ell2)
        return cfg.a * math.pi / (24.0 * cfg.A * ell2)
    if method == "finite_difference":
        pos = cfg.position(plate)
        h = TOL.fd_relative_step * pos

        def energy(p):
            if plate == "B":
                return casimir_energy(CavityConfig(cfg.a, cfg.A, p), "closed_form")
            return casimir_energy(CavityConfig(cfg.a, p, cfg.B), "closed_form")

        return -(energy(pos + h) - energy(pos - h)) / (2.0 * h)
    raise DomainError(f"unknown derivative method {method!r}")


# -- stress tensors ---------------------------------------------------------


def _to_frame(flat: StressTensor2, a: float, chi: float, frame: str) -> StressTensor2:
    """Map (tau, xi) components to (tau, chi) using d xi / d chi = 1 / (a chi)."""
    if frame == "flat_conformal_coords":
        return flat
    if frame != "rindler_coords":
        raise DomainError(f"unknown 2D frame {frame!r}")
    j = 1.0 / (a * chi)
    return StressTensor2(flat.T_tautau, flat.T_tauchi * j, flat.T_chichi * j * j, "rindler_coords")


def _check_inside(cfg: CavityConfig, chi: float) -> None:
    if not (cfg.A <= chi <= cfg.B):
        raise DomainError(f"chi = {chi} lies outside the cavity [{cfg.A}, {cfg.B}]")


def minkowski_cavity_stress(cfg: CavityConfig) -> StressTensor2:
    """Casimir tensor of the flat cavity of conformal length ``log(B/A)/a`` in (tau, xi)."""
    k = -(cfg.a**2) * math.pi / (24.0 * cfg.log_ratio**2)
    # k * (eta_mn + 2 delta^xi_m delta^xi_n) with eta = diag(1, -1)
    return StressTensor2(k, 0.0, k, "flat_conformal_coords")


def cavity_stress(cfg: CavityConfig, chi: float, frame: str = "rindler_coords") -> StressTensor2:
    """Finite Casimir part of the cavity stress tensor at ``chi`` (relative to the Rindler vacuum)."""
    _check_inside(cfg, chi)
    return _to_frame(minkowski_cavity_stress(cfg), cfg.a, chi, frame)


def rindler_vacuum_stress(a: float, chi: float, frame: str = "rindler_coords") -> StressTensor2:
    """Rindler vacuum relative to the Minkowski vacuum, ``-(a^2/24 pi)(dtau^2 + dchi^2/(a chi)^2)``."""
    if not chi > 0:
        raise DomainError(f"chi must be positive, got {chi}")
    jet = anomaly.SigmaJet2.linear(a * coords.conformal_coordinate(chi, a), 0.0, a)
    flat = anomaly.inhomogeneous_term_2d(jet)
    return _to_frame(flat, a, chi, frame)


def contract_pressure(T: StressTensor2, a: float, chi: float, tau: float) -> float:
    """``T(d_chi, d_x)`` with ``d_x = a chi sinh(a tau) d_tau + cosh(a tau) d_chi``; T in Rindler components."""
    if T.frame != "rindler_coords":
        raise DomainError("pressure contraction needs Rindler-frame components")
    u = a * tau
    return a * chi * math.sinh(u) * T.T_tauchi + math.cosh(u) * T.T_chichi


# -- method II: pressure ----------------------------------------------------


def _pressure_zeta(cfg: CavityConfig, plate: str, tau: float) -> float:
    chi = cfg.position(plate)
    sign = 1.0 if plate == "B" else -1.0
    return sign * -math.pi * math.cosh(cfg.a * tau) / (24.0 * chi**2 * cfg.log_ratio**2)


def pressure_force(
    cfg: CavityConfig,
    tau: float = 0.0,
    outside: OutsideState | str = OutsideState.RINDLER_VACUUM,
    plate: str = "B",
    method: str = "closed_form",
) -> PressureForce:
    """Pressure-method force on a plate, split into cavity and outside-state parts.

    ``method``: ``"closed_form"``; ``"damped"`` (bare mode sum minus
    continuum integral at the plate, regularized through :mod:`reg`); or
    ``"conformal"`` (flat cavity tensor pushed through the 2D anomaly law
    with sigma = a xi, then contracted at the plate).
    """
    _check_plate(plate)
    outside = OutsideState.parse(outside)
    chi = cfg.position(plate)
    sign = 1.0 if plate == "B" else -1.0
    u = cfg.a * tau

    if method == "closed_form":
        cav = _pressure_zeta(cfg, plate, tau)
        corr = 0.0
        if outside is OutsideState.MINKOWSKI_VACUUM:
            corr = sign * -math.cosh(u) / (24.0 * math.pi * chi**2)
        return PressureForce(plate, tau, outside, cav, corr)

    if method == "damped":
        # (cosh(a tau) / (a chi)^2) (sum n pi a^2 / (2 log^2) - int k dk) after k -> rescaled n
        c = math.pi / (2.0 * chi**2 * cfg.log_ratio**2) * math.cosh(u)
        cav = sign * reg.regularize_linear_difference(reg.LinearModeDensity(c)).value
        corr = 0.0
        if outside is OutsideState.MINKOWSKI_VACUUM:
            corr = sign * contract_pressure(rindler_vacuum_stress(cfg.a, chi), cfg.a, chi, tau)
        return PressureForce(plate, tau, outside, cav, corr)

    if method == "conformal":
        return conformal_pressure_force(cfg, tau, outside, plate)

    raise DomainError(f"unknown pressure method {method!r}")


def force_pressure_method(
    cfg: CavityConfig,
    tau: float = 0.0,
    outside: OutsideState | str = OutsideState.RINDLER_VACUUM,
    plate: str = "B",
    method: str = "closed_form",
) -> float:
    """Total pressure-method force, ``-pi cosh(a tau) / (24 B^2 log^2(B/A))`` for plate B."""
    return pressure_force(cfg, tau, outside, plate, method).total


def conformal_pressure_force(
    cfg: CavityConfig,
    tau: float = 0.0,
    outside: OutsideState | str = OutsideState.RINDLER_VACUUM,
    plate: str = "B",
) -> PressureForce:
    """Pressure force from the conformal-anomaly route.

    The flat cavity state in (tau, xi) is mapped onto the Rindler cavity with
    sigma = a xi. The inside tensor is compared with the outside state at the
    plate: the Rindler vacuum (same map applied to the empty flat vacuum) or
    the Minkowski vacuum (zero).
    """
    _check_plate(plate)
    outside = OutsideState.parse(outside)
    a = cfg.a
    chi = cfg.position(plate)
    sign = 1.0 if plate == "B" else -1.0
    xi = coords.conformal_coordinate(chi, a)
    jet = anomaly.SigmaJet2.linear(a * xi, 0.0, a)

    inside = anomaly.transform_stress_2d(minkowski_cavity_stress(cfg), jet)
    rindler_out = anomaly.transform_stress_2d(StressTensor2(0.0, 0.0, 0.0), jet)

    def force(T_flat):
        return sign * contract_pressure(_to_frame(T_flat, a, chi, "rindler_coords"), a, chi, tau)

    f_inside = force(inside)
    f_rindler = force(rindler_out)
    cav = f_inside - f_rindler
    corr = 0.0 if outside is OutsideState.RINDLER_VACUUM else f_rindler
    return PressureForce(plate, tau, outside, cav, corr)


# -- comparison -------------------------------------------------------------


def local_time_fix(force_I: float, cfg: CavityConfig, plate: str = "B") -> float:
    """Convert an energy-method force from chart time to the plate's proper time.

    Divides by the lapse ``a chi`` at the plate; the result is the
    pressure-method force at tau = 0.
    """
    _check_plate(plate)
    return force_I / (cfg.a * cfg.position(plate))


def twoforce_boost(rest_force: float, v: float) -> TwoForce:
    """Two-force of a pure rest-frame force ``(0, F)`` seen from a frame where the plate moves at ``v``."""
    if not abs(v) < 1.0:
        raise DomainError(f"|v| must be below 1, got {v}")
    gamma = 1.0 / math.sqrt((1.0 - v) * (1.0 + v))
    return TwoForce(gamma * v * rest_force, gamma * rest_force)


def plate_twoforce(cfg: CavityConfig, tau: float) -> TwoForce:
    """Two-force on plate B at Rindler time tau (plate velocity tanh(a tau))."""
    rest = force_pressure_method(cfg, 0.0)
    u = cfg.a * tau
    # gamma(tanh u) = cosh u exactly; avoid rounding through tanh for large u
    return TwoForce(math.sinh(u) * rest, math.cosh(u) * rest)
