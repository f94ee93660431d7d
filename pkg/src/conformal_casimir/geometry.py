"""Curvature of diagonal metrics from a local jet of the metric.

Everything here is assembled index by index from Christoffel symbols, with no
knowledge of conformal flatness or of FLRW closed forms, so it serves as the
independent path those closed forms are checked against. Entries may be
floats or :class:`~conformal_casimir.jets.Jet` objects; in the latter case the
outputs are jets too and carry their own derivatives.

Convention: ``R^a_{bcd} = d_c Gamma^a_{bd} - d_d Gamma^a_{bc} + ...`` and
``R_{bd} = R^a_{bad}``, with whatever signature the metric carries. For
``a(eta)^2 (d eta^2 - dx^2)`` this gives ``R = -6 a'' / a^3``, matching the
FLRW closed forms used in :mod:`conformal_casimir.cosmo`.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import jets
from .jets import value


@dataclass(frozen=True)
class DiagonalMetricJet:
    """Diagonal metric at a point with its first and second partial derivatives.

    ``g[m]`` is ``g_mm``; ``dg[k][m]`` is ``d_k g_mm``; ``ddg[k][l][m]`` is
    ``d_k d_l g_mm``.
    """

    g: tuple
    dg: tuple
    ddg: tuple

    @property
    def dim(self) -> int:
        return len(self.g)


def _zero_like(x):
    return 0.0 * x


def christoffel(mj: DiagonalMetricJet):
    """``Gamma[a][b][c] = Gamma^a_{bc}``."""
    n = mj.dim
    g, dg = mj.g, mj.dg
    zero = _zero_like(g[0])
    gam = [[[zero for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                s = zero
                if a == c:
                    s = s + dg[b][a]
                if a == b:
                    s = s + dg[c][a]
                if b == c:
                    s = s - dg[a][b]
                gam[a][b][c] = 0.5 * s / g[a]
    return gam


def christoffel_derivative(mj: DiagonalMetricJet):
    """``dGamma[e][a][b][c] = d_e Gamma^a_{bc}``."""
    n = mj.dim
    g, dg, ddg = mj.g, mj.dg, mj.ddg
    zero = _zero_like(g[0])
    out = [[[[zero for _ in range(n)] for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for e in range(n):
        for a in range(n):
            inv = 1.0 / g[a]
            dinv = -dg[e][a] * inv * inv
            for b in range(n):
                for c in range(n):
                    s = zero
                    ds = zero
                    if a == c:
                        s = s + dg[b][a]
                        ds = ds + ddg[e][b][a]
                    if a == b:
                        s = s + dg[c][a]
                        ds = ds + ddg[e][c][a]
                    if b == c:
                        s = s - dg[a][b]
                        ds = ds - ddg[e][a][b]
                    out[e][a][b][c] = 0.5 * (dinv * s + inv * ds)
    return out


def riemann(mj: DiagonalMetricJet, gam=None, dgam=None):
    """``Riem[a][b][c][d] = R^a_{bcd}``."""
    n = mj.dim
    gam = christoffel(mj) if gam is None else gam
    dgam = christoffel_derivative(mj) if dgam is None else dgam
    out = [[[[None] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    s = dgam[c][a][b][d] - dgam[d][a][b][c]
                    for e in range(n):
                        s = s + gam[a][c][e] * gam[e][b][d] - gam[a][d][e] * gam[e][b][c]
                    out[a][b][c][d] = s
    return out


def ricci(mj: DiagonalMetricJet, gam=None, dgam=None):
    """``Ric[b][d] = R_{bd} = R^a_{bad}``."""
    n = mj.dim
    gam = christoffel(mj) if gam is None else gam
    dgam = christoffel_derivative(mj) if dgam is None else dgam
    ric = [[None] * n for _ in range(n)]
    for b in range(n):
        for d in range(n):
            s = _zero_like(mj.g[0])
            for a in range(n):
                s = s + dgam[a][a][b][d] - dgam[d][a][b][a]
                for e in range(n):
                    s = s + gam[a][a][e] * gam[e][b][d] - gam[a][d][e] * gam[e][b][a]
            ric[b][d] = s
    return ric


def ricci_scalar(mj: DiagonalMetricJet, ric):
    s = _zero_like(mj.g[0])
    for m in range(mj.dim):
        s = s + ric[m][m] / mj.g[m]
    return s


def weyl_square(mj: DiagonalMetricJet, riem, ric, R) -> float:
    """``C_{abcd} C^{abcd}`` evaluated at the point (dimension >= 3)."""
    n = mj.dim
    if n < 3:
        raise ValueError("the Weyl tensor needs at least three dimensions")
    g = [value(x) for x in mj.g]
    Rv = value(R)
    ricv = [[value(ric[i][j]) for j in range(n)] for i in range(n)]
    total = 0.0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    r_low = g[a] * value(riem[a][b][c][d])
                    gac = g[a] if a == c else 0.0
                    gad = g[a] if a == d else 0.0
                    gbc = g[b] if b == c else 0.0
                    gbd = g[b] if b == d else 0.0
                    ric_part = (
                        gac * ricv[d][b] - gad * ricv[c][b] - gbc * ricv[d][a] + gbd * ricv[c][a]
                    ) / (n - 2)
                    scal = Rv * (gac * gbd - gad * gbc) / ((n - 1) * (n - 2))
                    C = r_low - ric_part + scal
                    total += C * C / (g[a] * g[b] * g[c] * g[d])
    return total


def scalar_hessian(gam, dphi, ddphi):
    """Covariant Hessian ``phi_{;mn} = d_m d_n phi - Gamma^l_{mn} d_l phi``."""
    n = len(dphi)
    out = [[None] * n for _ in range(n)]
    for m in range(n):
        for k in range(n):
            s = ddphi[m][k]
            for l in range(n):
                s = s - gam[l][m][k] * dphi[l]
            out[m][k] = s
    return out


def covariant_divergence(g_diag, gam, T, dT, with_scale=False):
    """``nabla^m T_{mn}`` for a symmetric tensor with partials ``dT[k][m][n]``.

    With ``with_scale`` also returns, per component, the largest absolute
    summand, against which a vanishing divergence can be judged.
    """
    n = len(g_diag)
    out = []
    scales = []
    for nu in range(n):
        s = 0.0
        big = 0.0
        for m in range(n):
            terms = [dT[m][m][nu]]
            for l in range(n):
                terms.append(-gam[l][m][m] * T[l][nu])
                terms.append(-gam[l][m][nu] * T[m][l])
            s = s + sum(terms) / g_diag[m]
            big = max(big, max(abs(t / g_diag[m]) for t in terms))
        out.append(s)
        scales.append(big)
    return (out, scales) if with_scale else out


def conformally_flat_jet(signature, sigma, dsigma, ddsigma) -> DiagonalMetricJet:
    """Metric jet of ``exp(2 sigma) diag(signature)`` from a jet of ``sigma``."""
    n = len(signature)
    g0 = [s * jets.exp(2.0 * sigma) for s in signature]
    dg = tuple(tuple(2.0 * dsigma[k] * g0[m] for m in range(n)) for k in range(n))
    ddg = tuple(
        tuple(
            tuple((4.0 * dsigma[k] * dsigma[l] + 2.0 * ddsigma[k][l]) * g0[m] for m in range(n))
            for l in range(n)
        )
        for k in range(n)
    )
    return DiagonalMetricJet(tuple(g0), dg, ddg)


def one_coordinate_jet(g_diag_jets) -> DiagonalMetricJet:
    """Metric jet for components that are jets in coordinate 0 only."""
    n = len(g_diag_jets)
    first = [gj.deriv() for gj in g_diag_jets]
    second = [f.deriv() for f in first]
    zero = 0.0 * second[0]
    dg = tuple(tuple(first[m] if k == 0 else zero for m in range(n)) for k in range(n))
    ddg = tuple(
        tuple(tuple(second[m] if (k == 0 and l == 0) else zero for m in range(n)) for l in range(n))
        for k in range(n)
    )
    return DiagonalMetricJet(tuple(g_diag_jets), dg, ddg)

