import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conformal_casimir import coords
from conformal_casimir.coords import CavityConfig, MinkowskiPoint, RindlerPoint
from conformal_casimir.errors import DomainError
from conformal_casimir.tolerances import TOL


def test_t_zero_slice():
    p = coords.rindler_from_minkowski(MinkowskiPoint(0.0, 2.0), 1.0)
    assert p.tau == 0.0 and p.chi == 2.0


def test_point_on_unit_hyperbola():
    p = coords.rindler_from_minkowski(MinkowskiPoint(1.0, math.sqrt(2.0)), 1.0)
    assert p.chi == pytest.approx(1.0, rel=1e-15)
    # atanh(1/sqrt 2) = asinh(1), evaluated at 40 digits
    assert p.tau == pytest.approx(0.88137358701954302523, rel=1e-14)


@pytest.mark.parametrize("t, x", [(1.0, 1.0), (-2.0, 2.0), (0.5, -3.0), (0.0, 0.0)])
def test_outside_right_wedge_rejected(t, x):
    with pytest.raises(DomainError):
        coords.rindler_from_minkowski(MinkowskiPoint(t, x), 1.0)


def test_hyperbola_parametrization():
    m = coords.minkowski_from_rindler(RindlerPoint(1.0, 1.0), 1.0)
    assert (m.t, m.x) == pytest.approx((math.sinh(1.0), math.cosh(1.0)))
    assert m.x**2 - m.t**2 == pytest.approx(1.0, rel=1e-14)
    m0 = coords.minkowski_from_rindler(RindlerPoint(0.0, 2.0), 3.0)
    assert (m0.t, m0.x) == (0.0, 2.0)


def test_round_trip_example():
    p = MinkowskiPoint(0.3, 1.7)
    back = coords.minkowski_from_rindler(coords.rindler_from_minkowski(p, 2.0), 2.0)
    assert back.t == pytest.approx(p.t, rel=TOL.round_trip)
    assert back.x == pytest.approx(p.x, rel=TOL.round_trip)


@given(
    st.floats(min_value=0.05, max_value=50.0),
    st.floats(min_value=-0.95, max_value=0.95),
    st.floats(min_value=0.1, max_value=10.0),
)
@settings(max_examples=200, deadline=None)
def test_round_trip_over_right_wedge(x, ratio, a):
    p = MinkowskiPoint(ratio * x, x)
    back = coords.minkowski_from_rindler(coords.rindler_from_minkowski(p, a), a)
    assert back.x == pytest.approx(p.x, rel=TOL.round_trip)
    assert back.t == pytest.approx(p.t, rel=TOL.round_trip, abs=TOL.round_trip * x)


@given(st.floats(min_value=0.1, max_value=10.0), st.floats(min_value=0.1, max_value=10.0))
@settings(max_examples=50, deadline=None)
def test_chi_independent_of_a(a1, a2):
    p = MinkowskiPoint(0.4, 1.3)
    r1 = coords.rindler_from_minkowski(p, a1)
    r2 = coords.rindler_from_minkowski(p, a2)
    assert r1.chi == r2.chi
    assert a1 * r1.tau == pytest.approx(a2 * r2.tau, rel=1e-14)


def test_trajectory_examples():
    assert coords.trajectory(1.0, 0.0) == (1.0, 0.0)
    x, v = coords.trajectory(2.0, 1.0)
    assert x == pytest.approx(math.sqrt(1.25))
    assert v == pytest.approx(2.0 / math.sqrt(5.0))
    # 1 - v ~ 1/(2 t^2); beyond t ~ 1e8 it is below double resolution
    _, v_late = coords.trajectory(1.0, 1e5)
    assert 1.0 - 1e-9 < v_late < 1.0


@given(st.floats(min_value=0.01, max_value=100.0), st.floats(min_value=-1e3, max_value=1e3))
@settings(max_examples=200, deadline=None)
def test_trajectory_stays_on_hyperbola(acc, t):
    x, v = coords.trajectory(acc, t)
    # x^2 - t^2 cancels; rounding grows like (acc t)^2
    rel = 1e-14 * (1.0 + (acc * t) ** 2)
    assert (x - t) * (x + t) == pytest.approx(1.0 / acc**2, rel=rel)
    assert abs(v) < 1.0


def test_trajectory_rejects_nonpositive_acceleration():
    with pytest.raises(DomainError):
        coords.trajectory(0.0, 1.0)


def test_conformal_coordinate_examples():
    assert coords.conformal_coordinate(0.5, 2.0) == 0.0
    assert coords.conformal_coordinate(math.e, 1.0) == pytest.approx(1.0)
    xi = coords.conformal_coordinate(3.0, 2.0)
    assert xi == pytest.approx(math.log(6.0) / 2.0)
    assert coords.chi_from_conformal(xi, 2.0) == pytest.approx(3.0, rel=1e-12)
    with pytest.raises(DomainError):
        coords.conformal_coordinate(0.0, 1.0)


@given(
    st.floats(min_value=0.1, max_value=5.0),
    st.floats(min_value=0.1, max_value=5.0),
    st.floats(min_value=1.01, max_value=50.0),
)
@settings(max_examples=100, deadline=None)
def test_conformal_width_of_cavity(a, A, ratio):
    B = A * ratio
    width = coords.conformal_coordinate(B, a) - coords.conformal_coordinate(A, a)
    assert width == pytest.approx(math.log(B / A) / a, rel=1e-10)


@pytest.mark.parametrize("a, A, B", [(0.0, 1.0, 2.0), (1.0, 0.0, 2.0), (1.0, 2.0, 2.0), (1.0, 2.0, 1.0)])
def test_cavity_config_validation(a, A, B):
    with pytest.raises(DomainError):
        CavityConfig(a, A, B)


def test_cavity_config_accessors():
    cfg = CavityConfig.from_length(2.0, 1.5, 0.5)
    assert cfg.B == 2.0 and cfg.L == 0.5
    assert cfg.acceleration("A") == pytest.approx(1 / 1.5)
    assert cfg.log_ratio == pytest.approx(math.log(2.0 / 1.5))
    with pytest.raises(DomainError):
        cfg.position("C")


def test_plate_velocity_is_tanh():
    assert coords.plate_velocity(0.5, 2.0) == pytest.approx(math.tanh(1.0))
