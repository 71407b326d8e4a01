"""Pointwise discrete operators for the four-unknown plate kinematics.

Every operator acts on the local DOF vector of the basis functions active at
one point, interleaved per control point as ``(u0, v0, wb, ws)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .splines import BasisEval

U, V, WB, WS = range(4)


@dataclass(frozen=True)
class DofLayout:
    dofs_per_control_point: int = 4

    def index(self, control_point, component):
        return self.dofs_per_control_point * np.asarray(control_point) + component

    def split(self, dof):
        return divmod(dof, self.dofs_per_control_point)

    def local_to_global(self, active_indices: np.ndarray) -> np.ndarray:
        m = self.dofs_per_control_point
        return (m * np.asarray(active_indices)[:, None] + np.arange(m)[None, :]).ravel()


DOFS = DofLayout()


@dataclass(frozen=True)
class PointOperators:
    Bm: np.ndarray
    Bb1: np.ndarray
    Bb2: np.ndarray
    Bs: np.ndarray
    Bz: np.ndarray
    Bt_b0: np.ndarray
    Bt_b1: np.ndarray
    Bt_b3: np.ndarray
    Bt_s0: np.ndarray
    Bt_s2: np.ndarray
    Bt_s4: np.ndarray
    Rmass: np.ndarray
    Bg: np.ndarray


def _require_second(basis: BasisEval):
    if basis.d2R is None or np.shape(basis.d2R)[0] != 3:
        raise ValueError("basis evaluation lacks second physical derivatives")


def _rows(n_rows: int, n: int, layout: DofLayout):
    return np.zeros((n_rows, layout.dofs_per_control_point * n))


def _col(layout: DofLayout, comp: int):
    return slice(comp, None, layout.dofs_per_control_point)


def strain_operators(basis: BasisEval, layout: DofLayout = DOFS):
    """``(Bm, Bb1, Bb2, Bs, Bz)``."""
    _require_second(basis)
    n = basis.R.size
    Rx, Ry = basis.dR
    Rxx, Ryy, Rxy = basis.d2R
    hess = np.vstack([Rxx, Ryy, 2.0 * Rxy])

    Bm = _rows(3, n, layout)
    Bm[0, _col(layout, U)] = Rx
    Bm[1, _col(layout, V)] = Ry
    Bm[2, _col(layout, U)] = Ry
    Bm[2, _col(layout, V)] = Rx

    Bb1 = _rows(3, n, layout)
    Bb1[:, _col(layout, WB)] = -hess
    Bb2 = _rows(3, n, layout)
    Bb2[:, _col(layout, WS)] = hess

    Bs = _rows(2, n, layout)
    Bs[0, _col(layout, WS)] = Rx
    Bs[1, _col(layout, WS)] = Ry

    Bz = _rows(1, n, layout)
    Bz[0, _col(layout, WS)] = basis.R
    return Bm, Bb1, Bb2, Bs, Bz


def curvature_operators(basis: BasisEval, layout: DofLayout = DOFS):
    """``(Bt_b0, Bt_b1, Bt_b3, Bt_s0, Bt_s2, Bt_s4)``; the zero chi_zz row is omitted."""
    _require_second(basis)
    n = basis.R.size
    Rx, Ry = basis.dR
    Rxx, Ryy, Rxy = basis.d2R

    Bt_b0 = _rows(3, n, layout)
    Bt_b0[:, _col(layout, WB)] = 0.5 * np.vstack([2.0 * Rxy, -2.0 * Rxy, Ryy - Rxx])
    Bt_b1 = _rows(3, n, layout)
    Bt_b1[:, _col(layout, WS)] = 0.25 * np.vstack([-2.0 * Rxy, 2.0 * Rxy, Rxx - Ryy])
    Bt_b3 = -Bt_b1

    Bt_s0 = _rows(2, n, layout)
    Bt_s0[0, _col(layout, U)] = -0.25 * Rxy
    Bt_s0[0, _col(layout, V)] = 0.25 * Rxx
    Bt_s0[1, _col(layout, U)] = -0.25 * Ryy
    Bt_s0[1, _col(layout, V)] = 0.25 * Rxy
    Bt_s2 = _rows(2, n, layout)
    Bt_s2[0, _col(layout, WS)] = -0.25 * Ry
    Bt_s2[1, _col(layout, WS)] = 0.25 * Rx
    Bt_s4 = -Bt_s2
    return Bt_b0, Bt_b1, Bt_b3, Bt_s0, Bt_s2, Bt_s4


def mass_operator(basis: BasisEval, layout: DofLayout = DOFS) -> np.ndarray:
    """9-row operator ``(u0, -wb,x, ws,x, v0, -wb,y, ws,y, wb, ws, 0)``."""
    n = basis.R.size
    R = basis.R
    Rx, Ry = basis.dR
    Rm = _rows(9, n, layout)
    Rm[0, _col(layout, U)] = R
    Rm[1, _col(layout, WB)] = -Rx
    Rm[2, _col(layout, WS)] = Rx
    Rm[3, _col(layout, V)] = R
    Rm[4, _col(layout, WB)] = -Ry
    Rm[5, _col(layout, WS)] = Ry
    Rm[6, _col(layout, WB)] = R
    Rm[7, _col(layout, WS)] = R
    return Rm


def geometric_operator(basis: BasisEval, phi0: float, layout: DofLayout = DOFS) -> np.ndarray:
    n = basis.R.size
    Rx, Ry = basis.dR
    Bg = _rows(2, n, layout)
    Bg[0, _col(layout, WB)] = Rx
    Bg[0, _col(layout, WS)] = phi0 * Rx
    Bg[1, _col(layout, WB)] = Ry
    Bg[1, _col(layout, WS)] = phi0 * Ry
    return Bg


def point_operators(basis: BasisEval, phi0: float, layout: DofLayout = DOFS) -> PointOperators:
    return PointOperators(
        *strain_operators(basis, layout),
        *curvature_operators(basis, layout),
        mass_operator(basis, layout),
        geometric_operator(basis, phi0, layout),
    )
