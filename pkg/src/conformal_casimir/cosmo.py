"""Spatially flat FLRW backgrounds in conformal time and the de Sitter Casimir force.

Metric ``ds^2 = a(eta)^2 (d eta^2 - dx^2 - dy^2 - dz^2)``, so ``sigma = log a``.
Curvature is available from the closed forms in terms of ``a, a', ..., a''''``
(:func:`flrw_curvature`) and from the generic Christoffel path in
:mod:`conformal_casimir.geometry` (:func:`flrw_curvature_generic`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import anomaly, geometry, jets
from .anomaly import CurvaturePack, FieldSpecies, get_species
from .errors import DomainError
from .jets import Jet
from .tensors import StressTensor4

JET_ORDER = 4


@dataclass(frozen=True)
class ScaleFactorJet:
    """``a(eta)`` and its first four conformal-time derivatives at ``eta``."""

    eta: float
    a0: float
    a1: float
    a2: float
    a3: float
    a4: float

    def __post_init__(self):
        if not self.a0 > 0:
            raise DomainError(f"scale factor must be positive, got a = {self.a0}")

    @property
    def derivatives(self) -> tuple[float, float, float, float, float]:
        return (self.a0, self.a1, self.a2, self.a3, self.a4)

    def as_jet(self) -> Jet:
        return Jet.from_derivatives(self.derivatives)

    @classmethod
    def from_jet(cls, eta: float, j: Jet) -> "ScaleFactorJet":
        d = j.derivatives()
        return cls(eta, *(float(v) for v in d[: JET_ORDER + 1]))


# -- scale-factor families ---------------------------------------------------
#
# Each family is a callable a(x) that works on floats and on Jets.


def de_sitter(H: float):
    """``a = 1/(H |eta|)``; eta > 0 is the branch a = 1/(H eta), eta < 0 the expanding patch."""
    if not H > 0:
        raise DomainError(f"de Sitter needs H > 0, got {H}")
    return lambda x: 1.0 / (H * abs(x))


def power_law(C: float, p: float):
    """``a = C eta^p`` for eta > 0 (p = 1 radiation, p = 2 matter)."""
    if not C > 0:
        raise DomainError(f"power-law prefactor must be positive, got {C}")

    def a(x):
        if jets.value(x) <= 0:
            raise DomainError("power-law scale factor is defined for eta > 0")
        if float(p).is_integer():
            return C * x ** int(p)
        return C * x**p

    return a


def tanh_transition(a_late: float, width: float = 1.0, center: float = 0.0):
    """``a = 1 + (a_late - 1)(1 + tanh((eta - center)/width))/2``, flat as eta -> -infinity."""
    if not a_late > 0 or not width > 0:
        raise DomainError("tanh family needs a_late > 0 and width > 0")
    return lambda x: 1.0 + (a_late - 1.0) * 0.5 * (1.0 + jets.tanh((x - center) / width))


def jet_from_family(family, eta: float) -> ScaleFactorJet:
    return ScaleFactorJet.from_jet(eta, family(Jet.variable(eta, JET_ORDER)))


def de_sitter_jet(H: float, eta: float) -> ScaleFactorJet:
    if eta == 0:
        raise DomainError("eta = 0 is conformal infinity of the de Sitter patch")
    return jet_from_family(de_sitter(H), eta)


# -- curvature ---------------------------------------------------------------


def _metric_diag(a0: float) -> tuple[float, float, float, float]:
    g = a0 * a0
    return (g, -g, -g, -g)


def _printed_R_jet(aj: Jet) -> Jet:
    return -6.0 * aj.deriv().deriv() / aj**3


def flrw_curvature(jet: ScaleFactorJet) -> CurvaturePack:
    """Curvature from the FLRW closed forms in ``a`` and its derivatives.

    The (1)H entries are those of the conserved tensor; :func:`printed_h1`
    gives the commonly quoted variant, which differs from it.
    ``boxR = (R'' + 2 (a'/a) R') / a^2`` with R(eta) = -6 a''/a^3
    differentiated through jet arithmetic.
    """
    a, a1, a2, a3, a4 = jet.derivatives
    g = _metric_diag(a)
    R_etaeta = 3.0 * (a1**2 - a * a2) / a**2
    R_ii = (a1**2 + a * a2) / a**2
    R = -6.0 * a2 / a**3
    h1_eta = 18.0 * a**-5 * (4.0 * a1**2 * a2 + a * a2**2 - 2.0 * a * a1 * a3)
    h1_ii = 6.0 * a**-5 * (16.0 * a1**2 * a2 - 5.0 * a * a2**2 - 10.0 * a * a1 * a3 + 2.0 * a**2 * a4)
    h3_eta = 3.0 * a1**4 / a**6
    h3_ii = (5.0 * a1**4 - 4.0 * a * a1**2 * a2) / a**6

    Rj = _printed_R_jet(jet.as_jet())
    boxR = (Rj.derivative(2) + 2.0 * (a1 / a) * Rj.derivative(1)) / a**2
    return CurvaturePack(
        g_diag=g,
        R_diag=(R_etaeta, R_ii, R_ii, R_ii),
        R=R,
        H1_diag=(h1_eta, h1_ii, h1_ii, h1_ii),
        H3_diag=(h3_eta, h3_ii, h3_ii, h3_ii),
        weyl_sq=0.0,
        boxR=boxR,
    )


def printed_h1(jet: ScaleFactorJet) -> tuple[float, float]:
    """``((1)H_etaeta, (1)H_ii)`` in the form usually quoted next to ``R = -6 a''/a^3``.

    This is ``2 R_;mn - 2 g box R - ...`` evaluated with geometry-sign
    curvature, which mixes two sign conventions. It is not covariantly
    conserved unless the background is de Sitter or a'' = 0. Kept for
    comparison only.
    """
    a, a1, a2, a3, a4 = jet.derivatives
    h1_eta = 18.0 * a**-5 * (-8.0 * a1**2 * a2 + a * a2**2 + 2.0 * a * a1 * a3)
    h1_ii = 6.0 * a**-5 * (-20.0 * a1**2 * a2 + 7.0 * a * a2**2 + 10.0 * a * a1 * a3 - 2.0 * a**2 * a4)
    return h1_eta, h1_ii


def flrw_curvature_generic(jet: ScaleFactorJet) -> CurvaturePack:
    """Same pack assembled from Christoffel symbols of the metric jet.

    The metric components are jets in eta, so the Ricci scalar comes out as a
    jet and its covariant Hessian needs no finite differences.
    """
    aj = jet.as_jet()
    g2 = aj * aj
    mj = geometry.one_coordinate_jet([g2, -g2, -g2, -g2])
    gam = geometry.christoffel(mj)
    dgam = geometry.christoffel_derivative(mj)
    ric = geometry.ricci(mj, gam, dgam)
    Rj = geometry.ricci_scalar(mj, ric)
    riem = geometry.riemann(mj, gam, dgam)

    n = 4
    gv = tuple(jets.value(x) for x in mj.g)
    gam_v = [[[jets.value(gam[a][b][c]) for c in range(n)] for b in range(n)] for a in range(n)]
    dR = [Rj.derivative(1), 0.0, 0.0, 0.0]
    ddR = [[Rj.derivative(2) if (i == 0 and k == 0) else 0.0 for k in range(n)] for i in range(n)]
    hess = geometry.scalar_hessian(gam_v, dR, ddR)
    for i in range(n):
        for k in range(n):
            if i != k and abs(hess[i][k]) > 1e-12 * (1.0 + abs(hess[i][i])):
                raise DomainError("non-diagonal Hessian of R; metric outside the diagonal ansatz")
    boxR = math.fsum(hess[m][m] / gv[m] for m in range(n))
    R = Rj.value
    ric_diag = tuple(jets.value(ric[m][m]) for m in range(n))
    hess_diag = tuple(hess[m][m] for m in range(n))
    h1, h3 = anomaly.h_tensors(gv, ric_diag, R, hess_diag, boxR)
    return CurvaturePack(
        g_diag=gv,
        R_diag=ric_diag,
        R=R,
        H1_diag=h1,
        H3_diag=h3,
        weyl_sq=geometry.weyl_square(mj, riem, ric, Rj),
        boxR=boxR,
    )


def pack_discrepancy(p: CurvaturePack, q: CurvaturePack) -> float:
    """Largest componentwise difference, relative to the curvature scale of ``p``."""
    scale_1 = max(abs(p.R), *(abs(r / g) for r, g in zip(p.R_diag, p.g_diag)), 1e-300)
    scale_2 = max(scale_1**2, *(abs(h / g) for h, g in zip(p.H1_diag + p.H3_diag, p.g_diag * 2)))
    errs = [abs(p.R - q.R) / scale_1]
    errs += [abs(x - y) / (scale_1 * abs(g)) for x, y, g in zip(p.R_diag, q.R_diag, p.g_diag)]
    errs += [abs(x - y) / (scale_2 * abs(g)) for x, y, g in zip(p.H1_diag, q.H1_diag, p.g_diag)]
    errs += [abs(x - y) / (scale_2 * abs(g)) for x, y, g in zip(p.H3_diag, q.H3_diag, p.g_diag)]
    return max(errs)


# -- stress and force ----------------------------------------------------------


@dataclass(frozen=True)
class PlatePairConfig:
    """Two comoving conducting plates at ``z1 < z2`` in a de Sitter background."""

    z1: float
    z2: float
    species: FieldSpecies
    H: float

    def __post_init__(self):
        object.__setattr__(self, "species", get_species(self.species))
        if not self.z2 > self.z1:
            raise DomainError(f"need z2 > z1, got z1={self.z1}, z2={self.z2}")
        if not (math.isfinite(self.H) and self.H >= 0):
            raise DomainError(f"Hubble parameter must be non-negative, got {self.H}")

    @property
    def d(self) -> float:
        return self.z2 - self.z1


@dataclass(frozen=True)
class DeSitterForce:
    """``F = H^2 eta^2 F_Mink + H^4 b / (960 pi^2)`` with both addends exposed."""

    eta: float
    conformal_factor: float
    minkowski_pressure: float
    flat_term: float
    anomaly_term: float

    @property
    def total(self) -> float:
        return self.flat_term + self.anomaly_term


def minkowski_casimir_pressure(d: float, species: FieldSpecies | str) -> float:
    """Flat-space Casimir pressure between ideal plates a comoving distance ``d`` apart."""
    if not d > 0:
        raise DomainError(f"plate separation must be positive, got {d}")
    species = get_species(species)
    base = -math.pi**2 / (240.0 * d**4)
    return base if species.name == "maxwell" else 0.5 * base


def minkowski_casimir_stress(d: float, species: FieldSpecies | str) -> StressTensor4:
    """Flat Casimir tensor between plates normal to z: ``(pi^2/720 d^4) diag(-1, 1, 1, -3)`` for Maxwell."""
    p = minkowski_casimir_pressure(d, species)
    u = -p / 3.0
    return StressTensor4((-u, u, u, p), "flat_conformal")


def desitter_stress(
    H: float, eta: float, T0: StressTensor4, species: FieldSpecies | str
) -> StressTensor4:
    """``H^2 eta^2 <T>_0 - (H^4 b / 960 pi^2) g`` on ``a = 1/(H|eta|)``."""
    if not H > 0:
        raise DomainError(f"de Sitter needs H > 0, got {H}")
    if eta == 0:
        raise DomainError("eta = 0 is outside the patch")
    if T0.frame != "flat_conformal":
        raise DomainError("homogeneous input must be in the flat conformal frame")
    species = get_species(species)
    factor = (H * eta) ** 2
    g = _metric_diag(1.0 / (H * abs(eta)))
    k = H**4 * species.b_coef / (960.0 * math.pi**2)
    return StressTensor4(tuple(factor * t - k * gm for t, gm in zip(T0.diag, g)), "curved")


def desitter_stress_generic(
    H: float, eta: float, T0: StressTensor4, species: FieldSpecies | str
) -> StressTensor4:
    """The same tensor through the general 4D transformation law and the generic curvature path."""
    jet = de_sitter_jet(H, eta)
    pack = flrw_curvature_generic(jet)
    return anomaly.transform_stress_4d(T0, math.log(jet.a0), pack, get_species(species))


def desitter_force(cfg: PlatePairConfig, eta: float | None = None, *, flat_limit: bool = False) -> DeSitterForce:
    """Casimir pressure on comoving plates in de Sitter.

    With ``flat_limit`` the evaluation time is renormalized so that the
    conformal factor is 1 (``eta = 1/H``); ``H = 0`` is then allowed and gives
    the flat pressure exactly.
    """
    species = cfg.species
    f_mink = minkowski_casimir_pressure(cfg.d, species)
    if flat_limit:
        eta = math.inf if cfg.H == 0 else 1.0 / cfg.H
        factor = 1.0
    else:
        if cfg.H == 0:
            raise DomainError("H = 0 has no de Sitter patch; use the flat-limit option")
        if eta is None or eta == 0 or not math.isfinite(eta):
            raise DomainError(f"need a finite non-zero conformal time, got {eta}")
        factor = (cfg.H * eta) ** 2
    anomaly_term = cfg.H**4 * species.b_coef / (960.0 * math.pi**2) + 0.0  # no -0.0 at H = 0
    return DeSitterForce(eta, factor, f_mink, factor * f_mink, anomaly_term)


def stress_divergence(stress_at, family, eta: float, h: float = 1e-4):
    """``nabla^m T_mn`` at eta for a diagonal tensor field ``stress_at(eta) -> StressTensor4``.

    The eta-derivative of T uses a fourth-order central difference; the
    Christoffel symbols come from the family's jet. Returns the divergence
    and the per-component size of its largest term.
    """
    jet = jet_from_family(family, eta)
    aj = jet.as_jet()
    g2 = aj * aj
    mj = geometry.one_coordinate_jet([g2, -g2, -g2, -g2])
    gam = geometry.christoffel(mj)
    n = 4
    gam_v = [[[jets.value(gam[a][b][c]) for c in range(n)] for b in range(n)] for a in range(n)]
    samples = {k: stress_at(eta + k * h).diag for k in (-2, -1, 1, 2)}
    dT_eta = [
        (samples[-2][m] - 8 * samples[-1][m] + 8 * samples[1][m] - samples[2][m]) / (12 * h)
        for m in range(n)
    ]
    T = stress_at(eta).diag
    Tm = [[T[i] if i == k else 0.0 for k in range(n)] for i in range(n)]
    dT = [[[0.0] * n for _ in range(n)] for _ in range(n)]
    for m in range(n):
        dT[0][m][m] = dT_eta[m]
    gv = tuple(jets.value(x) for x in mj.g)
    return geometry.covariant_divergence(gv, gam_v, Tm, dT, with_scale=True)
