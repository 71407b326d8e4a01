"""Pointwise strain, curvature, mass and geometric operators."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mcsplate.material import FgmSpec, TheoryConfig, phase, section_matrices
from mcsplate.plate_model import (
    DOFS, U, V, WB, WS, curvature_operators, geometric_operator, mass_operator, point_operators,
    strain_operators,
)
from mcsplate.splines import BasisEval, basis_all, eval_basis, make_circle_patch, make_square_patch

A, B = 2.0, 1.5
PATCH = make_square_patch(A, B, 3, 3, 2)
unit = st.floats(0.0, 1.0)


def interpolate(patch, field):
    """Control values reproducing ``field(x, y)`` exactly for tensor polynomials of degree <= p."""
    gu, gv = patch.knots_u.greville(), patch.knots_v.greville()
    Nu = np.array([basis_all(patch.knots_u, u)[0] for u in gu])
    Nv = np.array([basis_all(patch.knots_v, v)[0] for v in gv])
    values = np.array([[field(*patch.map(u, v)) for v in gv] for u in gu])
    return np.linalg.solve(Nu, np.linalg.solve(Nv, values.T).T)


def dof_vector(patch, **fields):
    """Global DOF vector from per-component fields, e.g. ``wb=lambda x, y: x * y``."""
    q = np.zeros(4 * patch.n_control_points)
    for name, comp in (("u", U), ("v", V), ("wb", WB), ("ws", WS)):
        if name in fields:
            q[comp::4] = interpolate(patch, fields[name]).ravel()
    return q


def local(q, be):
    return q[DOFS.local_to_global(be.active_indices)]


def components_touched(M):
    return {c for c in range(4) if np.any(M[:, c::4])}


class TestDofLayout:
    @given(st.integers(0, 10_000), st.integers(0, 3))
    def test_bijection(self, cp, comp):
        assert DOFS.split(int(DOFS.index(cp, comp))) == (cp, comp)

    def test_local_to_global(self):
        np.testing.assert_array_equal(DOFS.local_to_global(np.array([2, 5])), [8, 9, 10, 11, 20, 21, 22, 23])


class TestSparsity:
    @settings(max_examples=40)
    @given(unit, unit)
    def test_components(self, xi, eta):
        ops = point_operators(eval_basis(PATCH, xi, eta), phi0=-1.2)
        assert components_touched(ops.Bm) <= {U, V}
        assert components_touched(ops.Bb1) <= {WB}
        for M in (ops.Bb2, ops.Bs, ops.Bz, ops.Bt_b1, ops.Bt_b3, ops.Bt_s2, ops.Bt_s4):
            assert components_touched(M) <= {WS}
        assert components_touched(ops.Bt_b0) <= {WB}
        assert components_touched(ops.Bt_s0) <= {U, V}
        assert components_touched(ops.Bg) <= {WB, WS}
        assert not np.any(ops.Rmass[8])

    def test_shapes(self):
        ops = point_operators(eval_basis(PATCH, 0.3, 0.3), phi0=1.0)
        n = 4 * 16
        assert ops.Bm.shape == (3, n) and ops.Bs.shape == (2, n) and ops.Bz.shape == (1, n)
        assert ops.Bt_b0.shape == (3, n) and ops.Bt_s0.shape == (2, n)
        assert ops.Rmass.shape == (9, n) and ops.Bg.shape == (2, n)


class TestRigidMotion:
    @pytest.mark.parametrize("comp", [U, V, WB])
    @given(xi=unit, eta=unit)
    def test_translation_is_strain_free(self, comp, xi, eta):
        be = eval_basis(PATCH, xi, eta)
        q = np.zeros(4 * be.R.size)
        q[comp::4] = 1.0
        ops = point_operators(be, phi0=-1.2)
        for M in (ops.Bm, ops.Bb1, ops.Bb2, ops.Bs, ops.Bz, ops.Bt_b0, ops.Bt_b1, ops.Bt_b3,
                  ops.Bt_s0, ops.Bt_s2, ops.Bt_s4):
            np.testing.assert_allclose(M @ q, 0.0, atol=1e-11)

    def test_single_function_constant_field(self):
        be = BasisEval(np.array([0]), np.array([1.0]), np.zeros((2, 1)), np.zeros((3, 1)), 1.0, np.zeros(2))
        Bm, Bb1, Bb2, Bs, _ = strain_operators(be)
        for M in (Bm, Bb1, Bb2, Bs):
            assert not np.any(M)


class TestTranscription:
    """Operators applied to exactly interpolated polynomial fields."""

    @pytest.fixture(params=[(0.21, 0.67), (0.5, 0.5), (0.93, 0.08)])
    def be(self, request):
        return eval_basis(PATCH, *request.param)

    def test_membrane(self, be):
        x, y = be.point
        q = dof_vector(PATCH, u=lambda x, y: x**2 + 3 * y, v=lambda x, y: x * y)
        Bm = strain_operators(be)[0]
        np.testing.assert_allclose(Bm @ local(q, be), [2 * x, x, 3 + y], atol=1e-11)

    def test_bending_and_shear(self, be):
        x, y = be.point
        wb = lambda x, y: x**3 * y - 2 * y**2
        ws = lambda x, y: x**2 * y**3
        q = local(dof_vector(PATCH, wb=wb, ws=ws), be)
        _, Bb1, Bb2, Bs, Bz = strain_operators(be)
        np.testing.assert_allclose(Bb1 @ q, [-6 * x * y, 4.0, -2 * 3 * x**2], atol=1e-10)
        np.testing.assert_allclose(Bb2 @ q, [2 * y**3, 6 * x**2 * y, 2 * 6 * x * y**2], atol=1e-10)
        np.testing.assert_allclose(Bs @ q, [2 * x * y**3, 3 * x**2 * y**2], atol=1e-10)
        np.testing.assert_allclose(Bz @ q, [ws(x, y)], atol=1e-10)

    def test_twist_curvature(self, be):
        q = local(dof_vector(PATCH, wb=lambda x, y: x * y), be)
        np.testing.assert_allclose(curvature_operators(be)[0] @ q, [1.0, -1.0, 0.0], atol=1e-11)

    def test_curvature_blocks(self, be):
        x, y = be.point
        q = local(dof_vector(PATCH, u=lambda x, y: x**2 * y, v=lambda x, y: x**3,
                             ws=lambda x, y: x**2 + x * y**2), be)
        _, Bt_b1, Bt_b3, Bt_s0, Bt_s2, Bt_s4 = curvature_operators(be)
        wsx, wsy = 2 * x + y**2, 2 * x * y
        wsxx, wsyy, wsxy = 2.0, 2 * x, 2 * y
        np.testing.assert_allclose(Bt_b1 @ q, 0.25 * np.array([-2 * wsxy, 2 * wsxy, wsxx - wsyy]), atol=1e-10)
        np.testing.assert_allclose(Bt_b3 @ q, -(Bt_b1 @ q), atol=1e-12)
        uxy, uyy, vxx, vxy = 2 * x, 0.0, 6 * x, 0.0
        np.testing.assert_allclose(Bt_s0 @ q, 0.25 * np.array([vxx - uxy, vxy - uyy]), atol=1e-10)
        np.testing.assert_allclose(Bt_s2 @ q, 0.25 * np.array([-wsy, wsx]), atol=1e-10)
        np.testing.assert_allclose(Bt_s4 @ q, -(Bt_s2 @ q), atol=1e-12)

    @given(st.floats(0.1, 0.9), st.floats(0.1, 0.9), st.integers(0, 2**31 - 1))
    @settings(max_examples=20)
    def test_hessian_matches_finite_differences(self, xi, eta, seed):
        h = 1e-4
        # second derivatives jump across knots; keep the stencil inside one span
        if (np.min(np.abs(PATCH.knots_u.unique_knots() - xi)) < 2 * h / A
                or np.min(np.abs(PATCH.knots_v.unique_knots() - eta)) < 2 * h / B):
            return
        rng = np.random.default_rng(seed)
        q = rng.standard_normal(4 * PATCH.n_control_points)
        be = eval_basis(PATCH, xi, eta)
        x, y = be.point

        def wb(px, py):
            e = eval_basis(PATCH, px / A, py / B)
            return e.R @ q[WB::4][e.active_indices]

        c = wb(x, y)
        wxx = (wb(x + h, y) - 2 * c + wb(x - h, y)) / h**2
        wyy = (wb(x, y + h) - 2 * c + wb(x, y - h)) / h**2
        wxy = (wb(x + h, y + h) - wb(x + h, y - h) - wb(x - h, y + h) + wb(x - h, y - h)) / (4 * h**2)
        Bb1 = strain_operators(be)[1]
        got = Bb1 @ local(q, be)
        scale = max(1.0, np.abs(got).max())
        np.testing.assert_allclose(got, [-wxx, -wyy, -2 * wxy], atol=1e-5 * scale)


class TestMassAndGeometric:
    def test_unit_bending_dof(self):
        be = eval_basis(PATCH, 0.4, 0.7)
        Rm = mass_operator(be)
        col = Rm[:, 4 * 5 + WB]
        np.testing.assert_allclose(col[[1, 4]], -be.dR[:, 5])
        assert col[6] == be.R[5]
        assert np.count_nonzero(col) == 3

    @pytest.mark.parametrize("kind", ["rpt", "quasi3d"])
    @given(xi=unit, eta=unit)
    @settings(max_examples=15, deadline=None)
    def test_point_mass_is_psd(self, kind, xi, eta):
        theory = TheoryConfig.create(kind, "PresentRPT" if kind == "rpt" else "PresentQuasi3D")
        m = section_matrices(FgmSpec(phase("Al"), phase("Al2O3"), 0.0), theory).mass
        Rm = mass_operator(eval_basis(PATCH, xi, eta))
        Mp = Rm.T @ m @ Rm
        np.testing.assert_allclose(Mp, Mp.T, atol=1e-12 * np.abs(Mp).max())
        assert np.linalg.eigvalsh(Mp).min() > -1e-10 * np.abs(Mp).max()

    def test_rpt_geometric_columns_equal(self):
        Bg = geometric_operator(eval_basis(PATCH, 0.3, 0.6), phi0=1.0)
        np.testing.assert_array_equal(Bg[:, WB::4], Bg[:, WS::4])

    def test_quasi3d_geometric_scaling(self):
        phi0 = TheoryConfig.create("quasi3d", "PresentQuasi3D").phi0
        assert np.isclose(phi0, -1.2)
        Bg = geometric_operator(eval_basis(PATCH, 0.3, 0.6), phi0=phi0)
        np.testing.assert_allclose(Bg[:, WS::4], -1.2 * Bg[:, WB::4])
        assert not np.any(Bg[:, U::4]) and not np.any(Bg[:, V::4])


def test_missing_second_derivatives():
    be = eval_basis(make_circle_patch(1.0, 2, 1), 0.4, 0.4)
    crippled = BasisEval(be.active_indices, be.R, be.dR, None, be.jacobian_det, be.point)
    with pytest.raises(ValueError, match="second"):
        strain_operators(crippled)
    with pytest.raises(ValueError, match="second"):
        curvature_operators(crippled)
