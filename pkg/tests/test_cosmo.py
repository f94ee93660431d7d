import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import mp_curvature
from conformal_casimir import anomaly, cosmo
from conformal_casimir.errors import DomainError
from conformal_casimir.tensors import StressTensor4
from conformal_casimir.tolerances import TOL

# mpmath, 40 digits
MAXWELL_D1 = -0.041123351671205660912  # -pi^2/240
SCALAR_D1 = -0.020561675835602830456  # -pi^2/480
MAXWELL_ANOMALY = 0.0065436597769009810724  # 62/(960 pi^2)
DS_FORCE_UNIT = -0.047667011448106641984  # H = eta = d = 1, Maxwell

FAMILIES = {
    "de_sitter": (cosmo.de_sitter(0.7), -1.3, lambda x: 1 / (0.7 * abs(x))),
    "radiation": (cosmo.power_law(1.3, 1), 0.9, lambda x: 1.3 * x),
    "matter": (cosmo.power_law(0.8, 2), 1.1, lambda x: 0.8 * x * x),
    "power_2.5": (cosmo.power_law(1.0, 2.5), 1.2, lambda x: x**2.5),
    "tanh": (
        cosmo.tanh_transition(3.0, 0.8, 0.1),
        0.3,
        lambda x: 1 + 2 * (1 + mpmath.tanh((x - 0.1) / 0.8)) / 2,
    ),
}


def test_frozen_values_against_fresh_mpmath():
    with mpmath.workdps(40):
        assert float(-mpmath.pi**2 / 240) == MAXWELL_D1
        assert float(62 / (960 * mpmath.pi**2)) == MAXWELL_ANOMALY
        assert float(-mpmath.pi**2 / 240 - 62 / (960 * mpmath.pi**2)) == DS_FORCE_UNIT


def test_scale_factor_jet():
    jet = cosmo.jet_from_family(cosmo.power_law(2.0, 3), 1.5)
    assert jet.derivatives == pytest.approx((6.75, 13.5, 18.0, 12.0, 0.0))
    with pytest.raises(DomainError):
        cosmo.ScaleFactorJet(0.0, -1.0, 0.0, 0.0, 0.0, 0.0)
    with pytest.raises(DomainError):
        cosmo.de_sitter_jet(1.0, 0.0)
    with pytest.raises(DomainError):
        cosmo.power_law(1.0, 2)(-1.0)
    with pytest.raises(DomainError):
        cosmo.de_sitter(0.0)
    with pytest.raises(DomainError):
        cosmo.tanh_transition(2.0, 0.0)


def test_de_sitter_jet_branches():
    early = cosmo.de_sitter_jet(2.0, -0.5)
    late = cosmo.de_sitter_jet(2.0, 0.5)
    assert early.a0 == late.a0 == pytest.approx(1.0)
    assert early.a1 == pytest.approx(2.0) and late.a1 == pytest.approx(-2.0)


def test_tanh_family_approaches_flat_in_the_past():
    fam = cosmo.tanh_transition(3.0, 0.8)
    assert fam(-40.0) == pytest.approx(1.0, abs=1e-12)
    assert fam(40.0) == pytest.approx(3.0, abs=1e-12)


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_closed_form_against_generic_path(name):
    family, eta, _ = FAMILIES[name]
    jet = cosmo.jet_from_family(family, eta)
    err = cosmo.pack_discrepancy(cosmo.flrw_curvature(jet), cosmo.flrw_curvature_generic(jet))
    assert err < TOL.curvature_two_path


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_closed_form_against_finite_difference_oracle(name):
    family, eta, mp_fn = FAMILIES[name]
    pack = cosmo.flrw_curvature(cosmo.jet_from_family(family, eta))
    ora = mp_curvature.flrw_oracle(mp_fn, eta)
    s1 = max(abs(ora["R"]), *(abs(r / g) for r, g in zip(ora["ricci"], ora["g"])))
    s2 = max(s1 * s1, *(abs(h / g) for h, g in zip(ora["H1"] + ora["H3"], ora["g"] * 2)))
    assert abs(pack.R - ora["R"]) <= 1e-8 * s1
    assert abs(pack.boxR - ora["box"]) <= 1e-8 * s2
    for got, want, g in zip(pack.R_diag, ora["ricci"], ora["g"]):
        assert abs(got - want) <= 1e-8 * s1 * abs(g)
    for got, want, g in zip(pack.H1_diag + pack.H3_diag, ora["H1"] + ora["H3"], ora["g"] * 2):
        assert abs(got - want) <= 1e-8 * s2 * abs(g)


@given(
    st.floats(min_value=0.5, max_value=3.0),
    st.floats(min_value=-2.0, max_value=2.0),
    st.floats(min_value=-2.0, max_value=2.0),
    st.floats(min_value=-2.0, max_value=2.0),
    st.floats(min_value=-2.0, max_value=2.0),
)
@settings(max_examples=100, deadline=None)
def test_printed_h1_offset(a0, a1, a2, a3, a4):
    # printed minus conserved, from a symbolic expansion of both tensors
    jet = cosmo.ScaleFactorJet(0.0, a0, a1, a2, a3, a4)
    p_eta, p_ii = cosmo.printed_h1(jet)
    pack = cosmo.flrw_curvature(jet)
    d_eta = -72.0 * a1 * (3.0 * a1 * a2 - a0 * a3) / a0**5
    d_ii = 24.0 * (-(a0**2) * a4 + 5.0 * a0 * a1 * a3 + 3.0 * a0 * a2**2 - 9.0 * a1**2 * a2) / a0**5
    scale = 1.0 + max(abs(p_eta), abs(p_ii), abs(d_eta), abs(d_ii))
    assert abs(p_eta - pack.H1_diag[0] - d_eta) < 1e-12 * scale
    assert abs(p_ii - pack.H1_diag[1] - d_ii) < 1e-12 * scale


@pytest.mark.parametrize("name", ["de_sitter", "radiation"])
def test_printed_h1_agrees_when_offset_vanishes(name):
    family, eta, _ = FAMILIES[name]
    jet = cosmo.jet_from_family(family, eta)
    pack = cosmo.flrw_curvature(jet)
    scale = max(1.0, *(abs(h) for h in pack.H3_diag))
    for got, want in zip(cosmo.printed_h1(jet), pack.H1_diag[:2]):
        assert abs(got - want) < 1e-10 * scale


def test_printed_h1_is_not_conserved():
    family, eta, _ = FAMILIES["matter"]
    jet = cosmo.jet_from_family(family, eta)

    def printed(e):
        j = cosmo.jet_from_family(family, e)
        h_eta, h_ii = cosmo.printed_h1(j)
        return StressTensor4((h_eta, h_ii, h_ii, h_ii), "curved")

    def conserved(e):
        return StressTensor4(cosmo.flrw_curvature(cosmo.jet_from_family(family, e)).H1_diag, "curved")

    div_p, sc_p = cosmo.stress_divergence(printed, family, eta)
    div_c, sc_c = cosmo.stress_divergence(conserved, family, eta)
    assert abs(div_p[0]) / sc_p[0] > 0.1
    assert abs(div_c[0]) / sc_c[0] < TOL.divergence
    assert cosmo.printed_h1(jet)[0] == pytest.approx(-787.231204103925, rel=1e-12)


@pytest.mark.parametrize("H, eta", [(1.0, -1.0), (0.5, -3.0), (2.0, 0.7)])
def test_de_sitter_identities(H, eta):
    jet = cosmo.de_sitter_jet(H, eta)
    for pack in (cosmo.flrw_curvature(jet), cosmo.flrw_curvature_generic(jet)):
        h4 = H**4
        assert pack.R == pytest.approx(-12.0 * H * H, rel=TOL.de_sitter_identity)
        assert pack.boxR == pytest.approx(0.0, abs=TOL.de_sitter_identity * h4 * H)
        for h1, h3, g in zip(pack.H1_diag, pack.H3_diag, pack.g_diag):
            assert abs(h1 / g) < TOL.de_sitter_identity * h4
            assert h3 / g == pytest.approx(3.0 * h4, rel=TOL.de_sitter_identity)


def test_minkowski_casimir_values():
    assert cosmo.minkowski_casimir_pressure(1.0, "maxwell") == pytest.approx(MAXWELL_D1, rel=1e-15)
    assert cosmo.minkowski_casimir_pressure(1.0, "scalar") == pytest.approx(SCALAR_D1, rel=1e-15)
    assert cosmo.minkowski_casimir_pressure(2.0, "maxwell") == pytest.approx(MAXWELL_D1 / 16.0, rel=1e-15)
    T = cosmo.minkowski_casimir_stress(1.0, "maxwell")
    assert T.trace((1.0, -1.0, -1.0, -1.0)) == pytest.approx(0.0, abs=1e-17)
    assert T.T_zz == pytest.approx(MAXWELL_D1, rel=1e-15)
    assert T.diag[0] == pytest.approx(math.pi**2 / 720.0 * -1.0, rel=1e-15)
    with pytest.raises(DomainError):
        cosmo.minkowski_casimir_pressure(0.0, "maxwell")


@pytest.mark.parametrize("species", ["scalar", "maxwell"])
def test_de_sitter_stress_anomaly_part(species):
    H, eta = 1.3, -0.8
    sp = anomaly.get_species(species)
    T = cosmo.desitter_stress(H, eta, StressTensor4.zero(), species)
    g = cosmo.flrw_curvature(cosmo.de_sitter_jet(H, eta)).g_diag
    k = H**4 * sp.b_coef / (960.0 * math.pi**2)
    assert T.diag == pytest.approx(tuple(-k * gm for gm in g), rel=1e-14)
    generic = cosmo.desitter_stress_generic(H, eta, StressTensor4.zero(), species)
    assert generic.diag == pytest.approx(T.diag, rel=TOL.de_sitter_identity)


@pytest.mark.parametrize("species", ["scalar", "maxwell"])
def test_de_sitter_stress_two_paths_with_casimir_state(species):
    T0 = cosmo.minkowski_casimir_stress(1.3, species)
    for H, eta in ((1.0, -1.0), (0.3, -2.5), (2.0, 0.4)):
        a = cosmo.desitter_stress(H, eta, T0, species).diag
        b = cosmo.desitter_stress_generic(H, eta, T0, species).diag
        assert max(abs(x - y) for x, y in zip(a, b)) <= TOL.de_sitter_identity * max(map(abs, a))


def test_de_sitter_stress_is_conserved():
    H = 0.8
    family = cosmo.de_sitter(H)
    for sp in ("scalar", "maxwell"):
        div, _ = cosmo.stress_divergence(
            lambda e, sp=sp: cosmo.desitter_stress(H, e, StressTensor4.zero(), sp), family, -1.2
        )
        assert max(abs(d) for d in div) < TOL.divergence * H**5


def test_de_sitter_stress_errors():
    with pytest.raises(DomainError):
        cosmo.desitter_stress(0.0, 1.0, StressTensor4.zero(), "maxwell")
    with pytest.raises(DomainError):
        cosmo.desitter_stress(1.0, 0.0, StressTensor4.zero(), "maxwell")
    with pytest.raises(DomainError):
        cosmo.desitter_stress(1.0, 1.0, StressTensor4.zero("curved"), "maxwell")


def test_de_sitter_force_unit_example():
    f = cosmo.desitter_force(cosmo.PlatePairConfig(0.0, 1.0, "maxwell", 1.0), 1.0)
    assert f.flat_term == pytest.approx(MAXWELL_D1, rel=1e-15)
    assert f.anomaly_term == pytest.approx(-MAXWELL_ANOMALY, rel=1e-15)
    assert f.total == pytest.approx(DS_FORCE_UNIT, rel=1e-15)
    assert f.conformal_factor == 1.0


def test_de_sitter_force_scalar_anomaly_sign():
    f = cosmo.desitter_force(cosmo.PlatePairConfig(0.0, 1.0, "scalar", 1.0), 1.0)
    assert f.anomaly_term == pytest.approx(-MAXWELL_ANOMALY / 62.0, rel=1e-15)


@pytest.mark.parametrize("species", ["scalar", "maxwell"])
def test_de_sitter_force_flat_limit(species):
    flat = cosmo.minkowski_casimir_pressure(1.0, species)
    errs = []
    for H in (1e-1, 1e-2, 1e-3):
        f = cosmo.desitter_force(cosmo.PlatePairConfig(0.0, 1.0, species, H), flat_limit=True)
        assert f.eta == pytest.approx(1.0 / H)
        errs.append(abs(f.total / flat - 1.0))
    assert errs == sorted(errs, reverse=True) and errs[-1] < TOL.flat_limit
    f0 = cosmo.desitter_force(cosmo.PlatePairConfig(0.0, 1.0, species, 0.0), flat_limit=True)
    assert f0.total == flat
    assert math.copysign(1.0, f0.anomaly_term) == 1.0


def test_de_sitter_force_errors():
    with pytest.raises(DomainError):
        cosmo.desitter_force(cosmo.PlatePairConfig(0.0, 1.0, "maxwell", 0.0), 1.0)
    with pytest.raises(DomainError):
        cosmo.desitter_force(cosmo.PlatePairConfig(0.0, 1.0, "maxwell", 1.0), 0.0)
    with pytest.raises(DomainError):
        cosmo.PlatePairConfig(1.0, 1.0, "maxwell", 1.0)
    with pytest.raises(DomainError):
        cosmo.PlatePairConfig(0.0, 1.0, "maxwell", -1.0)
    with pytest.raises(DomainError):
        cosmo.PlatePairConfig(0.0, 1.0, "neutrino", 1.0)
