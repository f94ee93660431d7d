"""Trace anomaly and the stress-tensor transformation law on ``g = exp(2 sigma) eta``.

2D (signature +-)::

    <T_mn> = <T_mn>_0 + (1/12 pi) [ s_mn - s_m s_n + eta_mn (s_k s^k / 2 - s^k_k) ]

4D, restricted to diagonal metrics depending on one coordinate::

    <T_mn> = exp(-2 sigma) <T_mn>_0 - (1/16 pi^2) [ c/1080 H1_mn + b/180 H3_mn ]

``<T>_0`` is the flat-space expectation value of the pulled-back state; for
the conformal vacuum it vanishes and only the geometric part remains.

Signs. The anomaly formulas (``<T^m_m> = -R/24pi`` in 2D, the ``c box R``
term in 4D, and the usual ``(1)H = 2 R_;mn - 2 g box R - ...``) are written for
the Riemann convention ``R^a_{bcd} = d_d Gamma^a_{bc} - ...``, the opposite of
:mod:`conformal_casimir.geometry`. Curvature packs store the geometry sign
(4D de Sitter: R = -12H^2, as in the FLRW closed forms), and the functions
here flip the terms linear in curvature accordingly. :func:`curvature_scalar_2d`
returns R already in the anomaly convention (2D de Sitter: R = +2H^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import geometry
from .errors import BoundaryConditionError, DomainError
from .tensors import StressTensor2, StressTensor4

ETA_2D = (1.0, -1.0)


@dataclass(frozen=True)
class FieldSpecies:
    name: str
    a_coef: int
    b_coef: int
    c_coef: int


CONFORMAL_SCALAR = FieldSpecies("conformal_scalar", -1, -1, 1)
MAXWELL = FieldSpecies("maxwell", 13, -62, -18)

_SPECIES = {
    "conformal_scalar": CONFORMAL_SCALAR,
    "scalar": CONFORMAL_SCALAR,
    "maxwell": MAXWELL,
    "em": MAXWELL,
}


def get_species(name: str | FieldSpecies) -> FieldSpecies:
    if isinstance(name, FieldSpecies):
        return name
    try:
        return _SPECIES[name.lower()]
    except KeyError:
        raise DomainError(f"unknown field species {name!r}; choose scalar or maxwell") from None


@dataclass(frozen=True)
class SigmaJet2:
    """Value, gradient and Hessian of sigma(t, x) at one point, in flat coordinates."""

    sigma: float
    d_t: float
    d_x: float
    d_tt: float = 0.0
    d_tx: float = 0.0
    d_xx: float = 0.0

    @property
    def grad(self) -> tuple[float, float]:
        return (self.d_t, self.d_x)

    @property
    def hessian(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return ((self.d_tt, self.d_tx), (self.d_tx, self.d_xx))

    @classmethod
    def linear(cls, sigma: float, d_t: float, d_x: float) -> "SigmaJet2":
        return cls(sigma, d_t, d_x)

    @classmethod
    def from_function(cls, f, t: float, x: float, h: float = 1e-3) -> "SigmaJet2":
        """Jet from fourth-order central differences of ``f(t, x)``."""
        c1 = (1.0, -8.0, 8.0, -1.0)
        o1 = (-2, -1, 1, 2)

        def d1(g):
            return sum(c * g(o * h) for c, o in zip(c1, o1)) / (12.0 * h)

        def d2(g):
            return (-g(-2 * h) + 16 * g(-h) - 30 * g(0.0) + 16 * g(h) - g(2 * h)) / (12.0 * h * h)

        s_t = d1(lambda u: f(t + u, x))
        s_x = d1(lambda u: f(t, x + u))
        s_tt = d2(lambda u: f(t + u, x))
        s_xx = d2(lambda u: f(t, x + u))
        s_tx = d1(lambda u: d1(lambda w: f(t + u, x + w)))
        return cls(f(t, x), s_t, s_x, s_tt, s_tx, s_xx)


@dataclass(frozen=True)
class CurvaturePack:
    """Curvature data of a diagonal conformally flat metric at one point."""

    g_diag: tuple[float, ...]
    R_diag: tuple[float, ...]
    R: float
    H1_diag: tuple[float, ...]
    H3_diag: tuple[float, ...]
    weyl_sq: float
    boxR: float

    @property
    def ricci_sq(self) -> float:
        return math.fsum((r / g) ** 2 for r, g in zip(self.R_diag, self.g_diag))


# -- 2D ---------------------------------------------------------------------


def anomaly_trace_2d(R: float) -> float:
    return -R / (24.0 * math.pi)


def inhomogeneous_term_2d(jet: SigmaJet2, frame: str = "flat_conformal_coords") -> StressTensor2:
    """Geometric part of the 2D law (the result for the conformal vacuum)."""
    s = jet.grad
    ss = jet.hessian
    grad_sq = ETA_2D[0] * s[0] ** 2 + ETA_2D[1] * s[1] ** 2
    box = ETA_2D[0] * ss[0][0] + ETA_2D[1] * ss[1][1]
    comp = [[0.0, 0.0], [0.0, 0.0]]
    for m in range(2):
        for n in range(2):
            v = ss[m][n] - s[m] * s[n]
            if m == n:
                v += ETA_2D[m] * (0.5 * grad_sq - box)
            comp[m][n] = v / (12.0 * math.pi)
    return StressTensor2(comp[0][0], comp[0][1], comp[1][1], frame)


def transform_stress_2d(T0: StressTensor2, jet: SigmaJet2) -> StressTensor2:
    """Stress tensor on ``exp(2 sigma) eta`` from the flat-space one, components in the same chart."""
    return T0 + inhomogeneous_term_2d(jet, T0.frame)


def g_trace_2d(T: StressTensor2, jet: SigmaJet2) -> float:
    """Trace with the curved metric ``exp(2 sigma) diag(+1, -1)``."""
    return math.exp(-2.0 * jet.sigma) * T.flat_trace()


def curvature_scalar_2d(jet: SigmaJet2) -> float:
    """Ricci scalar of ``exp(2 sigma) diag(+1, -1)`` in the sign used by the 2D anomaly.

    Computed through the generic Christoffel path, then negated (see module
    docstring).
    """
    mj = geometry.conformally_flat_jet(ETA_2D, jet.sigma, jet.grad, jet.hessian)
    ric = geometry.ricci(mj)
    return -geometry.ricci_scalar(mj, ric)


# -- 4D ---------------------------------------------------------------------


def h_tensors(g_diag, ricci_diag, R, hess_R_diag, boxR):
    """Diagonal entries of the (1)H and (3)H tensors from geometry-sign curvature.

    ``hess_R_diag`` holds the diagonal of the covariant Hessian ``R_{;mn}``
    (off-diagonal entries vanish for the metrics handled here). (1)H is the
    metric variation of ``int R^2``, so it does not depend on the sign
    convention; with geometry-sign inputs it reads
    ``-2 R_;mn + 2 g box R - g R^2/2 + 2 R R_mn`` and is covariantly conserved.
    """
    ricci_sq = math.fsum((r / g) ** 2 for r, g in zip(ricci_diag, g_diag))
    h1 = []
    h3 = []
    for g, r, hr in zip(g_diag, ricci_diag, hess_R_diag):
        h1.append(-2.0 * hr + 2.0 * g * boxR - 0.5 * g * R * R + 2.0 * R * r)
        h3.append(r * r / g - (2.0 / 3.0) * R * r - 0.5 * ricci_sq * g + 0.25 * R * R * g)
    return tuple(h1), tuple(h3)


def anomaly_trace_4d(species: FieldSpecies, pack: CurvaturePack) -> float:
    """``(a C^2 + b (Ric^2 - R^2/3) + c box R) / 2880 pi^2``, box R taken in the anomaly sign."""
    species = get_species(species)
    bracket = (
        species.a_coef * pack.weyl_sq
        + species.b_coef * (pack.ricci_sq - pack.R**2 / 3.0)
        - species.c_coef * pack.boxR
    )
    return bracket / (2880.0 * math.pi**2)


def inhomogeneous_term_4d(pack: CurvaturePack, species: FieldSpecies) -> StressTensor4:
    species = get_species(species)
    c, b = species.c_coef, species.b_coef
    diag = tuple(
        -(c / 1080.0 * h1 + b / 180.0 * h3) / (16.0 * math.pi**2)
        for h1, h3 in zip(pack.H1_diag, pack.H3_diag)
    )
    return StressTensor4(diag, "curved")


def transform_stress_4d(
    T0: StressTensor4, sigma: float, pack: CurvaturePack, species: FieldSpecies
) -> StressTensor4:
    if T0.frame != "flat_conformal":
        raise DomainError("the homogeneous input must be given in the flat conformal frame")
    scale = math.exp(-2.0 * sigma)
    geo = inhomogeneous_term_4d(pack, species)
    return StressTensor4(tuple(scale * t + q for t, q in zip(T0.diag, geo.diag)), "curved")


# -- boundary conditions ----------------------------------------------------

BOUNDARY_CONDITIONS = ("dirichlet", "neumann", "perfect_conductor")


def check_boundary_condition(
    condition: str,
    *,
    normal_sigma_gradient: float = 0.0,
    homogeneous: bool = True,
    tol: float = 1e-12,
) -> None:
    """Raise :class:`BoundaryConditionError` unless the condition survives the conformal map.

    Homogeneous Dirichlet and perfect-conductor conditions always survive.
    Neumann survives only when sigma does not vary along the boundary normal;
    otherwise it turns into a position-dependent Robin condition.
    """
    if condition not in BOUNDARY_CONDITIONS:
        raise BoundaryConditionError(condition, "not supported by the conformal pipeline")
    if condition == "dirichlet" and not homogeneous:
        raise BoundaryConditionError(condition, "inhomogeneous Dirichlet data is not rescaling invariant")
    if condition == "neumann" and abs(normal_sigma_gradient) > tol:
        raise BoundaryConditionError(
            condition,
            f"conformal factor varies along the normal (d_n sigma = {normal_sigma_gradient:g}); "
            "the condition becomes Robin",
        )
