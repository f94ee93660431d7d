"""Numerical tolerances shared by the library, the verifier and the tests."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    round_trip: float = 1e-12
    linearity: float = 1e-12
    reg_oracle: float = 1e-6
    reg_vs_zeta: float = 1e-9
    energy: float = 1e-9
    finite_difference: float = 1e-6
    fd_relative_step: float = 1e-6
    method_ratio: float = 1e-10
    local_time_fix: float = 1e-12
    conformal_pipeline: float = 1e-10
    trace_2d: float = 1e-8
    trace_4d: float = 1e-10
    trace_4d_generic: float = 1e-8
    curvature_two_path: float = 1e-8
    de_sitter_identity: float = 1e-10
    weyl_sq: float = 1e-10
    homogeneous: float = 1e-14
    divergence: float = 1e-6
    lorentz_invariant: float = 1e-12
    flat_limit: float = 1e-6
    zero_acceleration: float = 1e-2


TOL = Tolerances()
