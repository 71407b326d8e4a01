"""Phases, grading laws, distribution functions and section integrals."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from mcsplate.material import (
    DISTRIBUTIONS, ConfigurationError, FgmSpec, Kind, PhaseProperties, Scheme, TheoryConfig,
    Variant, distribution_catalog, effective_properties, phase, section_matrices, volume_fraction,
)

AL, AL2O3 = phase("Al"), phase("Al2O3")
COUPLE_BLOCKS = ("Ac", "Bc", "Dc", "Ec", "Fc", "Hc", "Xc", "Yc", "Zc", "Tc", "Vc", "Wc")
TABLE_INDICES = (0.0, 0.5, 1.0, 2.0, 5.0, 10.0)


def theory(kind, name=None, l=0.0, h=1.0):
    name = name or ("PresentRPT" if kind == "rpt" else "PresentQuasi3D")
    return TheoryConfig.create(kind, name, l, h)


def all_entries(s):
    """Every section quantity as one flat vector."""
    parts = [s.Db, s.Ds, s.Dcb, s.Dcs, s.inertia]
    return np.concatenate([np.ravel(p) for p in parts])


# ---------------------------------------------------------------- phases


class TestPhase:
    def test_lookup(self):
        assert AL.E == 70e9

    def test_unknown(self):
        with pytest.raises(ConfigurationError, match="Steel"):
            phase("Steel")

    @pytest.mark.parametrize("E,nu,rho", [(0, 0.3, 1), (1, 0.5, 1), (1, -0.1, 1), (1, 0.3, 0)])
    def test_invalid(self, E, nu, rho):
        with pytest.raises(ValueError):
            PhaseProperties(E, nu, rho)

    def test_moduli(self):
        assert math.isclose(AL.G, 70e9 / 2.6)
        assert math.isclose(AL.K, 70e9 / 1.2)


# ---------------------------------------------------------------- grading


class TestVolumeFraction:
    @given(st.floats(0, 20))
    def test_top_is_ceramic(self, n):
        assert volume_fraction(FgmSpec(AL, AL2O3, n), 0.5, 1.0) == 1.0

    def test_linear_midplane(self):
        assert volume_fraction(FgmSpec(AL, AL2O3, 1.0), 0.0, 1.0) == 0.5

    @given(st.floats(-0.5, 0.5))
    def test_zero_index_is_ceramic(self, z):
        assert volume_fraction(FgmSpec(AL, AL2O3, 0.0), z, 1.0) == 1.0

    @given(st.floats(0, 20), st.floats(-0.5, 0.5))
    def test_in_unit_interval(self, n, z):
        for variant in Variant:
            assert 0.0 <= volume_fraction(FgmSpec(AL, AL2O3, n, variant=variant), z, 1.0) <= 1.0

    def test_metal_top_variant(self):
        spec = FgmSpec(AL, AL2O3, 2.0, variant="metal_top")
        assert math.isclose(volume_fraction(spec, 0.25, 1.0), 1.0 - 0.25**2)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            volume_fraction(FgmSpec(AL, AL2O3, 1.0), 0.51, 1.0)

    def test_negative_index(self):
        with pytest.raises(ValueError):
            FgmSpec(AL, AL2O3, -1.0)


class TestEffectiveProperties:
    @pytest.mark.parametrize("z,ref", [(0.5, AL2O3), (-0.5, AL)])
    @pytest.mark.parametrize("scheme", list(Scheme))
    def test_endpoints(self, z, ref, scheme):
        E, nu, rho, G = effective_properties(FgmSpec(AL, AL2O3, 1.5, scheme), z, 1.0)
        assert math.isclose(E, ref.E, rel_tol=1e-14)
        assert math.isclose(nu, ref.nu, rel_tol=1e-14)
        assert rho == ref.rho
        assert math.isclose(G, ref.G, rel_tol=1e-14)

    def test_mori_tanaka_oracle_below_mixture(self):
        # hand evaluation of the two-phase estimates at V_c = 1/2
        Km, Gm = 70e9 / 1.2, 70e9 / 2.6
        Kc, Gc = 380e9 / 1.2, 380e9 / 2.6
        f1 = Gm * (9 * Km + 8 * Gm) / (6 * (Km + 2 * Gm))
        K = Km + 0.5 * (Kc - Km) / (1 + 0.5 * (Kc - Km) / (Km + 4 * Gm / 3))
        G = Gm + 0.5 * (Gc - Gm) / (1 + 0.5 * (Gc - Gm) / (Gm + f1))
        expected = 9 * K * G / (3 * K + G)
        E, *_ = effective_properties(FgmSpec(AL, AL2O3, 1.0, "mori_tanaka"), 0.0, 1.0)
        assert math.isclose(E, expected, rel_tol=1e-14)
        assert E < 225e9

    @pytest.mark.parametrize("scheme", list(Scheme))
    @given(n=st.floats(0.1, 10))
    def test_modulus_non_decreasing(self, scheme, n):
        z = np.linspace(-0.5, 0.5, 101)
        E = effective_properties(FgmSpec(AL, AL2O3, n, scheme), z, 1.0)[0]
        assert np.all(np.diff(E) >= -1e-6 * E.max())

    @given(st.floats(0, 10), st.floats(-0.5, 0.5))
    def test_shear_from_young_and_poisson(self, n, z):
        E, nu, _, G = effective_properties(FgmSpec(AL, AL2O3, n, "mori_tanaka"), z, 1.0)
        assert math.isclose(G, E / (2 * (1 + nu)), rel_tol=1e-14)


# ---------------------------------------------------------------- distributions


class TestDistributions:
    @pytest.mark.parametrize("name", ["PresentRPT", "PresentQuasi3D"])
    @pytest.mark.parametrize("h", [1.0, 0.37])
    def test_traction_free(self, name, h):
        d = distribution_catalog(name, h)
        assert abs(d.df(h / 2)) < 1e-13 and abs(d.df(-h / 2)) < 1e-13

    def test_present_thickness_function(self):
        d = distribution_catalog("PresentQuasi3D", 1.0)
        assert math.isclose(d.phi(0.0), -1.2)
        z = np.linspace(-0.5, 0.5, 7)
        np.testing.assert_allclose(d.phi(z), 0.15 * d.df(z))

    def test_quasi3d_shear_factor_vanishes_at_surfaces(self):
        t = theory("quasi3d")
        _, dF, _, Phi, _ = t.shape(np.array([-0.5, 0.5]))
        np.testing.assert_allclose(dF + Phi, 0.0, atol=1e-13)

    def test_sin_origin(self):
        d = distribution_catalog("SinQuasi3D", 1.0)
        assert d.f(0.0) == 0.0 and d.df(0.0) == 0.0

    @pytest.mark.parametrize("name", DISTRIBUTIONS)
    def test_derivatives_match_differences(self, name):
        d = distribution_catalog(name, 0.8)
        z, eps = np.linspace(-0.39, 0.39, 9), 1e-6
        np.testing.assert_allclose(d.df(z), (d.f(z + eps) - d.f(z - eps)) / (2 * eps), atol=1e-7)
        np.testing.assert_allclose(d.d2f(z), (d.df(z + eps) - d.df(z - eps)) / (2 * eps), atol=1e-6)
        if d.phi is not None:
            np.testing.assert_allclose(d.dphi(z), (d.phi(z + eps) - d.phi(z - eps)) / (2 * eps), atol=1e-6)

    def test_unknown(self):
        with pytest.raises(ConfigurationError):
            distribution_catalog("Cubic", 1.0)

    def test_rpt_only_entry_rejected_for_quasi3d(self):
        with pytest.raises(ConfigurationError):
            theory("quasi3d", "ReddyRPT")

    def test_rpt_has_no_stretching(self):
        _, _, _, Phi, dPhi = theory("rpt").shape(np.linspace(-0.5, 0.5, 5))
        assert np.all(Phi == 1.0) and np.all(dPhi == 0.0)

    def test_negative_length_scale(self):
        with pytest.raises(ValueError):
            theory("rpt", l=-0.1)


# ---------------------------------------------------------------- section matrices


class TestSectionHomogeneous:
    @pytest.fixture(params=["rpt", "quasi3d"])
    def sec(self, request):
        return section_matrices(FgmSpec(AL, AL2O3, 0.0), theory(request.param, h=0.5))

    def test_parity_zeros(self, sec):
        scale = np.abs(sec.A).max()
        assert np.abs(sec.B).max() < 1e-14 * scale
        assert np.abs(sec.E).max() < 1e-14 * scale

    def test_membrane_stiffness(self, sec):
        E, nu = AL2O3.E, AL2O3.nu
        Q11 = E / (1 - nu**2) if sec.kind is Kind.RPT else E * (1 - nu) / ((1 + nu) * (1 - 2 * nu))
        assert math.isclose(sec.A[0, 0], Q11 * 0.5, rel_tol=1e-13)

    def test_mass(self, sec):
        assert math.isclose(sec.inertia[0], AL2O3.rho * 0.5, rel_tol=1e-13)
        assert abs(sec.inertia[1]) < 1e-14 * sec.inertia[0]
        assert abs(sec.inertia[3]) < 1e-14 * sec.inertia[0]


def _specs():
    for scheme in Scheme:
        for n in TABLE_INDICES:
            yield FgmSpec(AL, AL2O3, n, scheme)


@pytest.mark.parametrize("kind", ["rpt", "quasi3d"])
@pytest.mark.parametrize("spec", list(_specs()), ids=lambda s: f"{s.scheme.value}-n{s.n}")
class TestSectionProperties:
    def test_symmetry_and_definiteness(self, kind, spec):
        s = section_matrices(spec, theory(kind, l=0.3))
        for M in (s.Db, s.Ds, s.Dcb, s.Dcs):
            np.testing.assert_allclose(M, M.T, rtol=0, atol=1e-12 * np.abs(M).max())
        assert np.all(np.linalg.eigvalsh(s.Ds) > 0)

    def test_zero_length_scale_removes_couple_stress(self, kind, spec):
        s = section_matrices(spec, theory(kind, l=0.0))
        for name in COUPLE_BLOCKS:
            assert not np.any(getattr(s, name))

    def test_quadrature_adequacy(self, kind, spec):
        t = theory(kind, l=0.4)
        a, b = all_entries(section_matrices(spec, t, 50)), all_entries(section_matrices(spec, t, 200))
        # parity zeros only need to stay at round-off level
        np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-15 * np.abs(b).max())


def test_rpt_section_has_no_stretching_terms():
    s = section_matrices(FgmSpec(AL, AL2O3, 2.0), theory("rpt"))
    assert not np.any(s.X) and not np.any(s.Yb) and not np.any(s.Ys) and s.Z33 == 0.0
    I = s.inertia
    assert math.isclose(I[6], I[0], rel_tol=1e-14) and math.isclose(I[7], I[0], rel_tol=1e-14)


def test_adaptive_quadrature_oracle():
    """Al/Al2O3, n = 1, rule of mixtures, quasi-3D: every entry from scipy's adaptive quad."""
    h, l = 1.0, 0.35
    s = section_matrices(FgmSpec(AL, AL2O3, 1.0), theory("quasi3d", l=l, h=h))

    def E(z):
        return AL.E + (AL2O3.E - AL.E) * (0.5 + z / h)

    def rho(z):
        return AL.rho + (AL2O3.rho - AL.rho) * (0.5 + z / h)

    nu = 0.3
    c11 = (1 - nu) / ((1 + nu) * (1 - 2 * nu))
    G = lambda z: E(z) / (2 * (1 + nu))
    f = lambda z: -8 * z + 10 * z**3 + 1.2 * z**5 + 8 / 7 * z**7
    df = lambda z: -8 + 30 * z**2 + 6 * z**4 + 8 * z**6
    d2f = lambda z: 60 * z + 24 * z**3 + 48 * z**5
    phi = lambda z: 0.15 * df(z)
    dphi = lambda z: 0.15 * d2f(z)

    def integral(g):
        scale = h * max(abs(g(z)) for z in np.linspace(-h / 2, h / 2, 101))
        return quad(g, -h / 2, h / 2, epsabs=1e-14 * scale, epsrel=1e-13, limit=200)[0]

    Gbar = lambda z: 2 * G(z) * l**2
    expected = {
        ("A", 0, 0): integral(lambda z: c11 * E(z)),
        ("D", 0, 0): integral(lambda z: c11 * E(z) * z**2),
        ("B", 2, 2): integral(lambda z: G(z) * z),
        ("E", 0, 0): integral(lambda z: c11 * E(z) * f(z)),
        ("F", 0, 1): integral(lambda z: nu / ((1 + nu) * (1 - 2 * nu)) * E(z) * z * f(z)),
        ("H", 1, 1): integral(lambda z: c11 * E(z) * f(z) ** 2),
        ("X", 0, None): integral(lambda z: nu / ((1 + nu) * (1 - 2 * nu)) * E(z) * dphi(z)),
        ("Ys", 1, None): integral(lambda z: nu / ((1 + nu) * (1 - 2 * nu)) * E(z) * f(z) * dphi(z)),
        ("Z33", None, None): integral(lambda z: c11 * E(z) * dphi(z) ** 2),
        ("Ds", 0, 0): integral(lambda z: G(z) * (df(z) + phi(z)) ** 2),
        ("Ac", 0, 0): integral(Gbar),
        ("Dc", 1, 1): integral(lambda z: Gbar(z) * df(z) ** 2),
        ("Hc", 2, 2): integral(lambda z: Gbar(z) * phi(z) ** 2),
        ("Zc", 0, 0): integral(lambda z: Gbar(z) * d2f(z) ** 2),
        ("Wc", 1, 1): integral(lambda z: Gbar(z) * dphi(z) ** 2),
        ("Vc", 0, 0): integral(lambda z: Gbar(z) * d2f(z) * dphi(z)),
    }
    for (name, i, j), value in expected.items():
        got = getattr(s, name)
        got = got if i is None else (got[i] if j is None else got[i, j])
        assert math.isclose(float(got), value, rel_tol=1e-12), name
    inertia = [integral(lambda z, g=g: rho(z) * g(z)) for g in (
        lambda z: 1.0, lambda z: z, lambda z: z * z, f, lambda z: z * f(z), lambda z: f(z) ** 2,
        phi, lambda z: phi(z) ** 2)]
    np.testing.assert_allclose(s.inertia, inertia, rtol=1e-12)
