"""Cross-method and oracle checks over the whole library.

Each check returns the worst error it found together with the tolerance it
was judged against. ``run_checks(tol=...)`` replaces every tolerance by one
value, which is how the CLI injects deliberately impossible bounds.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass

from . import anomaly, cosmo, reg, rindler_cavity as rc
from .coords import CavityConfig
from .tensors import StressTensor2, StressTensor4
from .tolerances import TOL


@dataclass(frozen=True)
class CheckResult:
    name: str
    error: float
    tol: float
    passed: bool
    detail: str = ""
    # non-numeric side condition (e.g. monotonicity) that must also hold
    condition: bool = True

    def as_dict(self) -> dict:
        return asdict(self)

    def with_tol(self, tol: float) -> "CheckResult":
        passed = self.error <= tol and self.condition
        return CheckResult(self.name, self.error, tol, passed, self.detail, self.condition)


def _rel(x: float, ref: float) -> float:
    return abs(x - ref) / max(abs(ref), 1e-300)


def _result(name, error, tol, detail="", condition=True):
    return CheckResult(name, float(error), tol, bool(error <= tol and condition), detail, bool(condition))


# Smooth conformal factors for the 2D trace check and scale-factor jets for 4D.
SIGMA_PROFILES = {
    "gaussian_bump": (lambda t, x: 0.3 * math.exp(-(t * t + x * x)), 0.2, -0.4),
    "de_sitter_2d": (lambda t, x: -math.log(0.8 * t), 1.5, 0.3),
    "mixed_wave": (lambda t, x: 0.2 * math.sin(t + 2.0 * x) + 0.1 * x * x, 0.7, 0.1),
}


def generic_families():
    """Families with nonzero (1)H, used for the trace and conservation checks."""
    return {
        "matter": (cosmo.power_law(0.8, 2), 1.1),
        "power_2.5": (cosmo.power_law(1.0, 2.5), 1.2),
        "tanh": (cosmo.tanh_transition(3.0, 0.8, 0.1), 0.3),
    }


def two_path_families():
    return {
        "de_sitter": (cosmo.de_sitter(0.7), -1.3),
        "radiation": (cosmo.power_law(1.3, 1), 0.9),
        "matter": (cosmo.power_law(0.8, 2), 1.1),
        "tanh": (cosmo.tanh_transition(3.0, 0.8, 0.1), 0.3),
    }


# -- reg ---------------------------------------------------------------------


def check_reg(t) -> list[CheckResult]:
    out = []
    start = time.perf_counter()
    r1 = reg.regularize_linear_difference(reg.LinearModeDensity(1.0))
    elapsed = time.perf_counter() - start
    out.append(_result("reg.oracle_c1", abs(r1.value + 1.0 / 12.0), t.reg_oracle, f"{elapsed:.3f}s"))
    out.append(_result("reg.vs_zeta_c1", abs(r1.value - reg.ZETA_MINUS_ONE), t.reg_vs_zeta))

    worst = 0.0
    for c in (0.1, 1.0, 10.0):
        v = reg.regularize_linear_difference(reg.LinearModeDensity(c)).value
        worst = max(worst, abs(v - c * 2.0 * reg.zeta_frequency_sum(1.0)))
    out.append(_result("reg.oracle_equivalence", worst, t.reg_oracle))

    worst = 0.0
    for alpha in (0.5, 3.0, -2.0):
        v = reg.regularize_linear_difference(reg.LinearModeDensity(alpha * 1.7)).value
        ref = alpha * reg.regularize_linear_difference(reg.LinearModeDensity(1.7)).value
        worst = max(worst, _rel(v, ref))
    out.append(_result("reg.linearity", worst, t.linearity))

    base = reg.regularize_linear_difference(reg.LinearModeDensity(1.0), "euler_maclaurin_cutoff")
    doubled = reg.regularize_linear_difference(
        reg.LinearModeDensity(1.0), "euler_maclaurin_cutoff", eps0=0.05
    )
    shift = abs(doubled.value - base.value)
    out.append(
        _result(
            "reg.cutoff_independence",
            shift,
            base.extrapolation_error_estimate,
            "tolerance is the reported error estimate",
        )
    )
    return out


# -- rindler_cavity ----------------------------------------------------------


def check_rindler(t) -> list[CheckResult]:
    out = []
    cfg = CavityConfig(1.0, 1.0, 2.0)
    f1 = rc.force_energy_method(cfg, "B")
    f2 = rc.force_pressure_method(cfg, 0.0)
    out.append(_result("rindler.method_ratio", _rel(f2 / f1, 1.0 / (cfg.a * cfg.B)), t.method_ratio))

    worst = 0.0
    for a, A, B in ((1.0, 1.0, 2.0), (0.3, 2.0, 7.0), (4.0, 0.5, 0.6)):
        c = CavityConfig(a, A, B)
        for plate in ("A", "B"):
            fixed = rc.local_time_fix(rc.force_energy_method(c, plate), c, plate)
            worst = max(worst, _rel(fixed, rc.force_pressure_method(c, 0.0, plate=plate)))
    out.append(_result("rindler.local_time_fix", worst, t.local_time_fix))

    errs = [
        abs(rc.force_pressure_method(CavityConfig.from_length(1.0, A, 1.0), 0.0) + math.pi / 24.0)
        for A in (1e2, 1e3, 1e4)
    ]
    monotone = all(x > y for x, y in zip(errs, errs[1:]))
    out.append(
        _result(
            "rindler.zero_acceleration_limit",
            errs[-1],
            t.zero_acceleration,
            "monotone" if monotone else "not monotone",
            monotone,
        )
    )

    worst = 0.0
    A, B, tau_a = 1.3, 3.1, 0.4
    ref = rc.force_pressure_method(CavityConfig(1.0, A, B), 0.0)
    for a in (0.5, 1.0, 2.0):
        c = CavityConfig(a, A, B)
        worst = max(worst, _rel(rc.conformal_pressure_force(c, 0.0).total, ref))
        worst = max(worst, _rel(rc.conformal_pressure_force(c, tau_a / a).total, ref * math.cosh(tau_a)))
    out.append(_result("rindler.conformal_a_independence", worst, t.conformal_pipeline))

    worst = 0.0
    for plate in ("A", "B"):
        worst = max(
            worst,
            _rel(rc.force_energy_method(cfg, plate, "finite_difference"), rc.force_energy_method(cfg, plate)),
        )
    out.append(_result("rindler.finite_difference", worst, t.finite_difference))

    worst = 0.0
    for v in (0.0, 0.3, -0.7, 0.999):
        tf = rc.twoforce_boost(-1.7, v)
        worst = max(worst, _rel(tf.invariant(), 1.7**2))
    out.append(_result("rindler.lorentz_invariant", worst, t.lorentz_invariant))

    worst = 0.0
    for c in (cfg, CavityConfig(1.0, 1.0, math.e)):
        z = rc.casimir_energy(c, "zeta")
        worst = max(worst, abs(rc.casimir_energy(c, "damped") - z))
        worst = max(worst, abs(rc.casimir_energy(c, "euler_maclaurin") - z))
    out.append(_result("rindler.energy_paths", worst, t.reg_oracle))
    return out


# -- anomaly -----------------------------------------------------------------


def check_anomaly(t) -> list[CheckResult]:
    out = []
    worst = 0.0
    zero2 = StressTensor2(0.0, 0.0, 0.0)
    for f, t0, x0 in SIGMA_PROFILES.values():
        jet = anomaly.SigmaJet2.from_function(f, t0, x0)
        tr = anomaly.g_trace_2d(anomaly.transform_stress_2d(zero2, jet), jet)
        worst = max(worst, abs(tr - anomaly.anomaly_trace_2d(anomaly.curvature_scalar_2d(jet))))
    out.append(_result("anomaly.trace_2d", worst, t.trace_2d))

    worst = 0.0
    fams = dict(generic_families(), de_sitter=(cosmo.de_sitter(1.0), -1.0))
    for family, eta in fams.values():
        pack = cosmo.flrw_curvature_generic(cosmo.jet_from_family(family, eta))
        for sp in (anomaly.CONFORMAL_SCALAR, anomaly.MAXWELL):
            geo = anomaly.inhomogeneous_term_4d(pack, sp)
            ref = anomaly.anomaly_trace_4d(sp, pack)
            worst = max(worst, _rel(geo.trace(pack.g_diag), ref))
    out.append(_result("anomaly.trace_4d", worst, t.trace_4d_generic))

    worst = 0.0
    for family, eta in fams.values():
        pack = cosmo.flrw_curvature_generic(cosmo.jet_from_family(family, eta))
        worst = max(worst, abs(pack.weyl_sq) / max(pack.R**2, 1e-300))
    out.append(_result("anomaly.weyl_sq", worst, t.weyl_sq, "relative to R^2"))

    jet = anomaly.SigmaJet2.from_function(*SIGMA_PROFILES["mixed_wave"])
    T0 = StressTensor2(0.3, -0.1, 0.7)
    S0 = StressTensor2(-1.2, 0.05, 2.0)
    diff = anomaly.transform_stress_2d(T0 + S0, jet) - anomaly.transform_stress_2d(T0, jet) - S0
    out.append(_result("anomaly.homogeneous_covariance", float(abs(diff.as_matrix()).max()), t.homogeneous))

    for label, idx in (("H1", 0), ("H3", 1)):
        worst = 0.0
        for family, eta in generic_families().values():

            def field(e, family=family):
                pack = cosmo.flrw_curvature_generic(cosmo.jet_from_family(family, e))
                return StressTensor4((pack.H1_diag, pack.H3_diag)[idx], "curved")

            div, scales = cosmo.stress_divergence(field, family, eta)
            worst = max(worst, max(abs(d) / s for d, s in zip(div, scales) if s > 0))
        out.append(_result(f"anomaly.{label}_divergence_free", worst, t.divergence, "relative to largest term"))
    return out


# -- cosmo -------------------------------------------------------------------


def check_cosmo(t) -> list[CheckResult]:
    out = []
    worst = 0.0
    for family, eta in two_path_families().values():
        jet = cosmo.jet_from_family(family, eta)
        worst = max(worst, cosmo.pack_discrepancy(cosmo.flrw_curvature(jet), cosmo.flrw_curvature_generic(jet)))
    out.append(_result("cosmo.two_path_curvature", worst, t.curvature_two_path))

    worst = 0.0
    for H, eta in ((1.0, -1.0), (0.5, -3.0), (2.0, 0.7)):
        jet = cosmo.de_sitter_jet(H, eta)
        for pack in (cosmo.flrw_curvature(jet), cosmo.flrw_curvature_generic(jet)):
            h4 = H**4
            worst = max(worst, _rel(pack.R, -12.0 * H * H))
            worst = max(worst, max(abs(h / g) for h, g in zip(pack.H1_diag, pack.g_diag)) / h4)
            worst = max(worst, max(abs(h / g - 3.0 * h4) for h, g in zip(pack.H3_diag, pack.g_diag)) / h4)
    out.append(_result("cosmo.de_sitter_identities", worst, t.de_sitter_identity))

    worst = 0.0
    H = 0.8
    family = cosmo.de_sitter(H)
    for sp in (anomaly.CONFORMAL_SCALAR, anomaly.MAXWELL):
        zero = StressTensor4.zero()
        div, _ = cosmo.stress_divergence(lambda e, sp=sp: cosmo.desitter_stress(H, e, zero, sp), family, -1.2)
        worst = max(worst, max(abs(d) for d in div) / H**5)
    out.append(_result("cosmo.de_sitter_conservation", worst, t.divergence, "units of H^5"))

    worst = 0.0
    T0 = cosmo.minkowski_casimir_stress(1.3, "maxwell")
    for sp in ("scalar", "maxwell"):
        for H, eta in ((1.0, -1.0), (0.3, -2.5)):
            a = cosmo.desitter_stress(H, eta, T0, sp).diag
            b = cosmo.desitter_stress_generic(H, eta, T0, sp).diag
            worst = max(worst, max(abs(x - y) for x, y in zip(a, b)) / max(abs(x) for x in a))
    out.append(_result("cosmo.de_sitter_two_path", worst, t.de_sitter_identity))

    worst = 0.0
    for sp in ("scalar", "maxwell"):
        flat = cosmo.minkowski_casimir_pressure(1.0, sp)
        for H in (1e-2, 1e-3, 0.0):
            cfg = cosmo.PlatePairConfig(0.0, 1.0, sp, H)
            worst = max(worst, _rel(cosmo.desitter_force(cfg, flat_limit=True).total, flat))
    out.append(_result("cosmo.flat_limit", worst, t.flat_limit))
    return out


SUITES = {
    "reg": check_reg,
    "rindler_cavity": check_rindler,
    "anomaly": check_anomaly,
    "cosmo": check_cosmo,
}


def run_checks(tol: float | None = None) -> list[CheckResult]:
    """Run every check; ``tol`` overrides all tolerances when given."""
    results = []
    for suite in SUITES.values():
        for r in suite(TOL):
            results.append(r if tol is None else r.with_tol(tol))
    return results
