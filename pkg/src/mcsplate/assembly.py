"""Global stiffness, mass, geometric stiffness and load assembly; constraints."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from .material import ConfigurationError, SectionMatrices, TheoryConfig
from .plate_model import DOFS, U, V, WB, WS, DofLayout, geometric_operator, point_operators
from .splines import Patch, eval_basis


class EdgeCondition(str, Enum):
    S = "S"
    C = "C"
    F = "F"


class DiskCondition(str, Enum):
    SIMPLE = "SimpleSupport"
    CLAMPED = "Clamped"


@dataclass(frozen=True)
class BcSpec:
    """Rectangle: four edge codes ordered (x=0, x=a, y=0, y=b). Disk: one code."""

    edges: tuple[EdgeCondition, ...] | None = None
    disk: DiskCondition | None = None
    # clamp u0, v0 on the adjacent row too (fixes their normal derivative)
    clamp_inplane_adjacent: bool = False

    def __post_init__(self):
        if (self.edges is None) == (self.disk is None):
            raise ConfigurationError("boundary spec needs exactly one of edges / disk")
        if self.edges is not None:
            if len(self.edges) != 4:
                raise ConfigurationError(f"rectangle boundary spec needs 4 edges, got {len(self.edges)}")
            try:
                edges = tuple(EdgeCondition(e) for e in self.edges)
            except ValueError as exc:
                raise ConfigurationError(f"unknown edge code in {self.edges!r}") from exc
            object.__setattr__(self, "edges", edges)
        else:
            try:
                object.__setattr__(self, "disk", DiskCondition(self.disk))
            except ValueError as exc:
                raise ConfigurationError(f"unknown disk boundary condition {self.disk!r}") from exc

    @classmethod
    def parse(cls, text: str, clamp_inplane_adjacent: bool = False) -> "BcSpec":
        """``SSSS``/``CCCC``/``SCSC``/... for rectangles, ``SS``/``CC`` or the full name for disks."""
        t = text.strip()
        aliases = {"SS": DiskCondition.SIMPLE, "CC": DiskCondition.CLAMPED,
                   "SimpleSupport": DiskCondition.SIMPLE, "Clamped": DiskCondition.CLAMPED}
        if t in aliases:
            return cls(disk=aliases[t], clamp_inplane_adjacent=clamp_inplane_adjacent)
        if len(t) != 4:
            raise ConfigurationError(f"cannot parse boundary condition {text!r}")
        return cls(edges=tuple(t.upper()), clamp_inplane_adjacent=clamp_inplane_adjacent)

    @property
    def label(self) -> str:
        if self.edges is not None:
            return "".join(e.value for e in self.edges)
        return "SS" if self.disk is DiskCondition.SIMPLE else "CC"


class LoadKind(str, Enum):
    UNIFORM = "uniform"
    SINUSOIDAL = "sinusoidal"


@dataclass(frozen=True)
class Load:
    kind: LoadKind = LoadKind.SINUSOIDAL
    q0: float = 1.0
    a: float = 1.0
    b: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", LoadKind(self.kind))

    def __call__(self, x: float, y: float) -> float:
        if self.kind is LoadKind.UNIFORM:
            return self.q0
        return self.q0 * math.sin(math.pi * x / self.a) * math.sin(math.pi * y / self.b)


@dataclass
class GlobalSystem:
    K: np.ndarray
    M: np.ndarray
    Kg: np.ndarray
    F: np.ndarray
    free: np.ndarray
    n_total: int
    Ks: np.ndarray | None = None
    Kc: np.ndarray | None = None
    constrained: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=int))
    layout: DofLayout = DOFS

    @property
    def n_free(self) -> int:
        return self.free.size

    def expand(self, q_free: np.ndarray) -> np.ndarray:
        """Scatter free-DOF vectors (or column blocks) to the full DOF space."""
        q_free = np.asarray(q_free)
        out = np.zeros((self.n_total,) + q_free.shape[1:], dtype=q_free.dtype)
        out[self.free] = q_free
        return out


def quadrature_rule(p_u: int, p_v: int):
    """Tensor Gauss–Legendre rule on [-1, 1]² with (p_u+1)(p_v+1) points."""
    if p_u < 2 or p_v < 2:
        raise ValueError("degrees must be >= 2")
    xu, wu = np.polynomial.legendre.leggauss(p_u + 1)
    xv, wv = np.polynomial.legendre.leggauss(p_v + 1)
    pts = np.array([(a, b) for a in xu for b in xv])
    wts = np.array([c * d for c in wu for d in wv])
    return pts, wts


@dataclass(frozen=True)
class PatchQuadrature:
    """Material-independent operator stacks at every quadrature point.

    Arrays are indexed ``[element, point, row, local_dof]``; ``dofs`` holds
    each element's global DOF indices.
    """

    dofs: np.ndarray
    dA: np.ndarray
    B: np.ndarray
    Bs: np.ndarray
    Bt_b: np.ndarray
    Bt_s: np.ndarray
    Rmass: np.ndarray
    Bg_b: np.ndarray
    Bg_s: np.ndarray
    R: np.ndarray
    points: np.ndarray
    n_total: int

    @classmethod
    def build(cls, patch: Patch, layout: DofLayout = DOFS) -> "PatchQuadrature":
        pts, wts = quadrature_rule(*patch.degrees)
        acc: dict[str, list] = {k: [] for k in ("dofs", "dA", "B", "Bs", "Bt_b", "Bt_s",
                                                 "Rmass", "Bg_b", "Bg_s", "R", "points")}
        for (u0, u1), (v0, v1) in patch.elements():
            ju, jv = 0.5 * (u1 - u0), 0.5 * (v1 - v0)
            el: dict[str, list] = {k: [] for k in acc if k != "dofs"}
            idx = None
            for (s, t), w in zip(pts, wts):
                be = eval_basis(patch, u0 + ju * (s + 1.0), v0 + jv * (t + 1.0))
                op = point_operators(be, 0.0, layout)
                idx = layout.local_to_global(be.active_indices)
                el["dA"].append(w * ju * jv * abs(be.jacobian_det))
                el["B"].append(np.vstack([op.Bm, op.Bb1, op.Bb2, op.Bz]))
                el["Bs"].append(op.Bs)
                el["Bt_b"].append(np.vstack([op.Bt_b0, op.Bt_b1, op.Bt_b3]))
                el["Bt_s"].append(np.vstack([op.Bt_s0, op.Bt_s2, op.Bt_s4]))
                el["Rmass"].append(op.Rmass)
                el["Bg_b"].append(op.Bg)
                el["Bg_s"].append(geometric_operator(be, 1.0, layout) - op.Bg)
                el["R"].append(be.R)
                el["points"].append(be.point)
            acc["dofs"].append(idx)
            for k, v in el.items():
                acc[k].append(np.array(v))
        arrays = {k: np.array(v) for k, v in acc.items()}
        return cls(**arrays, n_total=layout.dofs_per_control_point * patch.n_control_points)


def _integrate(dA: np.ndarray, Bl: np.ndarray, D: np.ndarray) -> np.ndarray:
    """Per-element ``sum_p dA Bl^T D Bl``."""
    E, P, r, m = Bl.shape
    DB = np.matmul(D, Bl) * dA[..., None, None]
    return np.matmul(Bl.reshape(E, P * r, m).transpose(0, 2, 1), DB.reshape(E, P * r, m))


def _scatter(n: int, dofs: np.ndarray, Ke: np.ndarray) -> np.ndarray:
    flat = (dofs[:, :, None] * n + dofs[:, None, :]).ravel()
    return np.bincount(flat, weights=Ke.ravel(), minlength=n * n).reshape(n, n)


def load_vector(quadrature: PatchQuadrature, theory: TheoryConfig, load: Load) -> np.ndarray:
    """Consistent load: ``q R`` on wb rows and ``phi(h/2) q R`` on ws rows."""
    q = quadrature
    qv = np.array([[load(x, y) for x, y in el] for el in q.points]) * q.dA
    fe = np.einsum("ep,epa->ea", qv, q.R)
    F = np.zeros(q.n_total)
    phi_top = theory.phi_top
    for idx, f in zip(q.dofs, fe):
        F[idx[WB::4]] += f
        F[idx[WS::4]] += phi_top * f
    return F


def assemble(
    patch: Patch,
    section: SectionMatrices,
    theory: TheoryConfig,
    load: Load | None = None,
    n0: np.ndarray | None = None,
    quadrature: PatchQuadrature | None = None,
) -> GlobalSystem:
    """Unconstrained ``K = Ks + Kc``, ``M``, ``Kg`` and ``F`` over all DOFs.

    ``quadrature`` may carry operator stacks precomputed for ``patch``.
    """
    if not math.isclose(section.thickness, theory.thickness, rel_tol=1e-12) or section.kind is not theory.kind:
        raise ConfigurationError("section matrices were built for a different thickness or theory")
    q = PatchQuadrature.build(patch) if quadrature is None else quadrature
    n = q.n_total
    N0 = -np.eye(2) if n0 is None else np.asarray(n0, dtype=float)
    Bg = q.Bg_b + theory.phi0 * q.Bg_s

    Ks = _scatter(n, q.dofs, _integrate(q.dA, q.B, section.Db) + _integrate(q.dA, q.Bs, section.Ds))
    if np.any(section.Dcb) or np.any(section.Dcs):
        Kc = _scatter(n, q.dofs, _integrate(q.dA, q.Bt_b, section.Dcb) + _integrate(q.dA, q.Bt_s, section.Dcs))
    else:
        Kc = np.zeros((n, n))
    M = _scatter(n, q.dofs, _integrate(q.dA, q.Rmass, section.mass))
    Kg = _scatter(n, q.dofs, _integrate(q.dA, Bg, N0))

    F = np.zeros(n) if load is None else load_vector(q, theory, load)
    sym = lambda A: 0.5 * (A + A.T)
    Ks, Kc, M, Kg = sym(Ks), sym(Kc), sym(M), sym(Kg)
    return GlobalSystem(Ks + Kc, M, Kg, F, np.arange(n), n, Ks=Ks, Kc=Kc)


def resolve_bcs(patch: Patch, bc: BcSpec, layout: DofLayout = DOFS) -> np.ndarray:
    """Sorted global indices of constrained DOFs.

    Edges are the four parametric boundaries of the patch. A simple support
    fixes wb, ws and the in-plane component along the edge. A clamp fixes all
    four DOFs on the boundary row and wb, ws on the first interior row, which
    zeroes the edge slopes. A disk applies the same rule to each of its four
    boundary arcs.
    """
    nu, nv = patch.shape
    dofs: set[int] = set()
    adjacent = (U, V, WB, WS) if bc.clamp_inplane_adjacent else (WB, WS)

    def add(points, comps):
        for c in comps:
            dofs.update(int(d) for d in layout.index(np.asarray(points), c))

    def row(edge: int, offset: int):
        if edge == 0:
            return offset * nv + np.arange(nv)
        if edge == 1:
            return (nu - 1 - offset) * nv + np.arange(nv)
        if edge == 2:
            return np.arange(nu) * nv + offset
        return np.arange(nu) * nv + (nv - 1 - offset)

    if bc.disk is not None:
        code = EdgeCondition.S if bc.disk is DiskCondition.SIMPLE else EdgeCondition.C
        edges = (code,) * 4
    else:
        edges = bc.edges
    for edge, code in enumerate(edges):
        if code is EdgeCondition.S:
            tangential = V if edge < 2 else U
            add(row(edge, 0), (tangential, WB, WS))
        elif code is EdgeCondition.C:
            add(row(edge, 0), (U, V, WB, WS))
            add(row(edge, 1), adjacent)
    return np.array(sorted(dofs), dtype=int)


def reduce(system: GlobalSystem, constrained) -> GlobalSystem:
    """Delete constrained rows and columns."""
    constrained = np.unique(np.asarray(constrained, dtype=int))
    if constrained.size and (constrained.min() < 0 or constrained.max() >= system.K.shape[0]):
        raise ValueError("constrained DOF index out of range")
    keep = np.setdiff1d(np.arange(system.K.shape[0]), constrained)
    if keep.size == 0:
        raise ValueError("every DOF is constrained; the reduced system is empty")
    ix = np.ix_(keep, keep)
    sub = lambda A: None if A is None else A[ix]
    return replace(
        system,
        K=system.K[ix], M=system.M[ix], Kg=system.Kg[ix], F=system.F[keep],
        Ks=sub(system.Ks), Kc=sub(system.Kc),
        free=system.free[keep],
        constrained=np.union1d(system.constrained, system.free[constrained]),
    )
