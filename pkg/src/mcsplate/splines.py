"""B-spline / NURBS machinery for single-patch plate discretizations.

Control points are stored as an ``(n_u, n_v, 2)`` array; the global index of
control point ``(i, j)`` is ``i * n_v + j`` (C order), with ``u`` running
along ``x`` for the square patch.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class GeometryError(ValueError):
    """Raised when the geometric map is singular or a point lies outside it."""


@dataclass(frozen=True)
class KnotVector:
    knots: np.ndarray
    degree: int

    def __post_init__(self):
        knots = np.asarray(self.knots, dtype=float)
        object.__setattr__(self, "knots", knots)
        p = self.degree
        if p < 0:
            raise ValueError("degree must be non-negative")
        if np.any(np.diff(knots) < 0):
            raise ValueError("knots must be non-decreasing")
        if self.n_basis < p + 1:
            raise ValueError("too few knots for the requested degree")
        first = int(np.sum(knots == knots[0]))
        last = int(np.sum(knots == knots[-1]))
        if knots[0] == knots[-1] or first != p + 1 or last != p + 1:
            raise ValueError("knot vector must be open: end knots repeated exactly p+1 times")

    @property
    def n_basis(self) -> int:
        return len(self.knots) - self.degree - 1

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.knots[0]), float(self.knots[-1])

    def unique_knots(self) -> np.ndarray:
        return np.unique(self.knots)

    @property
    def n_spans(self) -> int:
        return len(self.unique_knots()) - 1

    def spans(self) -> list[tuple[float, float]]:
        u = self.unique_knots()
        return list(zip(u[:-1], u[1:]))

    def greville(self) -> np.ndarray:
        p = self.degree
        if p == 0:
            return 0.5 * (self.knots[:-1] + self.knots[1:])
        return np.array([self.knots[i + 1: i + p + 1].mean() for i in range(self.n_basis)])


def open_uniform(p: int, n_spans: int, a: float = 0.0, b: float = 1.0) -> KnotVector:
    interior = np.linspace(a, b, n_spans + 1)[1:-1]
    return KnotVector(np.concatenate([[a] * (p + 1), interior, [b] * (p + 1)]), p)


def find_span(kv: KnotVector, xi: float) -> int:
    """Index ``i`` with ``knots[i] <= xi < knots[i+1]``.

    Spans are half-open; at the right end of the domain the last non-empty
    span is returned.
    """
    U, p = kv.knots, kv.degree
    lo, hi = kv.domain
    if xi < lo or xi > hi or not np.isfinite(xi):
        raise ValueError(f"parameter {xi!r} outside knot range [{lo}, {hi}]")
    n = kv.n_basis
    if xi >= U[n]:
        return n - 1
    return int(np.searchsorted(U, xi, side="right") - 1)


def basis_derivs(kv: KnotVector, xi: float, order: int = 2, span: int | None = None) -> np.ndarray:
    """Values and derivatives of the p+1 non-zero B-splines at ``xi``.

    Returns an ``(order+1, p+1)`` array; row ``k`` holds the k-th derivative
    of ``N_{span-p}, ..., N_{span}``. Rows with ``k > p`` are zero.
    """
    U, p = kv.knots, kv.degree
    if span is None:
        span = find_span(kv, xi)
    ndu = np.zeros((p + 1, p + 1))
    left = np.zeros(p + 1)
    right = np.zeros(p + 1)
    ndu[0, 0] = 1.0
    for j in range(1, p + 1):
        left[j] = xi - U[span + 1 - j]
        right[j] = U[span + j] - xi
        saved = 0.0
        for r in range(j):
            # lower triangle stores knot differences
            ndu[j, r] = right[r + 1] + left[j - r]
            temp = ndu[r, j - 1] / ndu[j, r] if ndu[j, r] != 0.0 else 0.0
            ndu[r, j] = saved + right[r + 1] * temp
            saved = left[j - r] * temp
        ndu[j, j] = saved

    ders = np.zeros((order + 1, p + 1))
    ders[0] = ndu[:, p]
    a = np.zeros((2, p + 1))
    for r in range(p + 1):
        s1, s2 = 0, 1
        a[0, 0] = 1.0
        for k in range(1, min(order, p) + 1):
            d = 0.0
            rk, pk = r - k, p - k
            if r >= k:
                a[s2, 0] = a[s1, 0] / ndu[pk + 1, rk] if ndu[pk + 1, rk] != 0.0 else 0.0
                d = a[s2, 0] * ndu[rk, pk]
            j1 = 1 if rk >= -1 else -rk
            j2 = k - 1 if r - 1 <= pk else p - r
            for j in range(j1, j2 + 1):
                den = ndu[pk + 1, rk + j]
                a[s2, j] = (a[s1, j] - a[s1, j - 1]) / den if den != 0.0 else 0.0
                d += a[s2, j] * ndu[rk + j, pk]
            if r <= pk:
                den = ndu[pk + 1, r]
                a[s2, k] = -a[s1, k - 1] / den if den != 0.0 else 0.0
                d += a[s2, k] * ndu[r, pk]
            ders[k, r] = d
            s1, s2 = s2, s1
    fac = p
    for k in range(1, min(order, p) + 1):
        ders[k] *= fac
        fac *= p - k
    return ders


def basis_all(kv: KnotVector, xi: float, order: int = 0) -> np.ndarray:
    """Dense row of all ``n_basis`` functions (and derivatives) at ``xi``."""
    span = find_span(kv, xi)
    d = basis_derivs(kv, xi, order, span)
    out = np.zeros((order + 1, kv.n_basis))
    out[:, span - kv.degree: span + 1] = d
    return out


@dataclass(frozen=True)
class BasisEval:
    """Non-zero rational basis functions at one point, pushed to (x, y)."""

    active_indices: np.ndarray
    R: np.ndarray
    dR: np.ndarray  # (2, n): d/dx, d/dy
    d2R: np.ndarray  # (3, n): xx, yy, xy
    jacobian_det: float
    point: np.ndarray


@dataclass(frozen=True)
class Patch:
    knots_u: KnotVector
    knots_v: KnotVector
    control_points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        cp = np.asarray(self.control_points, dtype=float)
        w = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "control_points", cp)
        object.__setattr__(self, "weights", w)
        shape = (self.knots_u.n_basis, self.knots_v.n_basis)
        if cp.shape != shape + (2,):
            raise ValueError(f"control net shape {cp.shape} does not match basis counts {shape}")
        if w.shape != shape:
            raise ValueError(f"weights shape {w.shape} does not match basis counts {shape}")
        if np.any(w <= 0):
            raise ValueError("weights must be strictly positive")

    @property
    def shape(self) -> tuple[int, int]:
        return self.weights.shape

    @property
    def n_control_points(self) -> int:
        return self.weights.size

    @property
    def degrees(self) -> tuple[int, int]:
        return self.knots_u.degree, self.knots_v.degree

    def elements(self) -> list[tuple[tuple[float, float], tuple[float, float]]]:
        return [(su, sv) for su in self.knots_u.spans() for sv in self.knots_v.spans()]

    def homogeneous(self) -> np.ndarray:
        w = self.weights[..., None]
        return np.concatenate([self.control_points * w, w], axis=-1)

    @classmethod
    def from_homogeneous(cls, ku: KnotVector, kv: KnotVector, Pw: np.ndarray) -> "Patch":
        w = Pw[..., -1]
        return cls(ku, kv, Pw[..., :-1] / w[..., None], w)

    def map(self, xi: float, eta: float) -> np.ndarray:
        """Physical point of parametric ``(xi, eta)``."""
        Nu = basis_all(self.knots_u, xi)[0]
        Nv = basis_all(self.knots_v, eta)[0]
        Pw = self.homogeneous()
        h = np.einsum("i,j,ijk->k", Nu, Nv, Pw)
        return h[:2] / h[2]


def eval_basis(patch: Patch, xi: float, eta: float, *, check_jacobian: bool = True) -> BasisEval:
    """Rational basis with first and second physical derivatives at a point."""
    ku, kv = patch.knots_u, patch.knots_v
    p, q = ku.degree, kv.degree
    su, sv = find_span(ku, xi), find_span(kv, eta)
    Nu = basis_derivs(ku, xi, 2, su)
    Nv = basis_derivs(kv, eta, 2, sv)
    iu = np.arange(su - p, su + 1)
    iv = np.arange(sv - q, sv + 1)
    w = patch.weights[np.ix_(iu, iv)].ravel()
    P = patch.control_points[np.ix_(iu, iv)].reshape(-1, 2)

    def tp(a, b):
        return np.outer(Nu[a], Nv[b]).ravel() * w

    # weighted tensor products and their parametric derivatives
    F = tp(0, 0)
    Fu, Fv = tp(1, 0), tp(0, 1)
    Fuu, Fvv, Fuv = tp(2, 0), tp(0, 2), tp(1, 1)
    W, Wu, Wv = F.sum(), Fu.sum(), Fv.sum()
    Wuu, Wvv, Wuv = Fuu.sum(), Fvv.sum(), Fuv.sum()

    R = F / W
    Ru = (Fu - R * Wu) / W
    Rv = (Fv - R * Wv) / W
    Ruu = (Fuu - 2.0 * Ru * Wu - R * Wuu) / W
    Rvv = (Fvv - 2.0 * Rv * Wv - R * Wvv) / W
    Ruv = (Fuv - Ru * Wv - Rv * Wu - R * Wuv) / W

    x = R @ P
    J = np.column_stack([Ru @ P, Rv @ P])  # J[i, a] = dx_i / dxi_a
    detJ = float(np.linalg.det(J))
    active = (iu[:, None] * patch.shape[1] + iv[None, :]).ravel()
    if abs(detJ) <= 1e-14 * max(1.0, np.abs(J).max() ** 2):
        if check_jacobian:
            raise GeometryError(f"singular geometry Jacobian at (xi, eta) = ({xi}, {eta})")
        # physical derivatives undefined; values stay usable
        return BasisEval(active, R, np.full((2, R.size), np.nan), np.full((3, R.size), np.nan), detJ, x)

    dpar = np.vstack([Ru, Rv])
    dR = np.linalg.solve(J.T, dpar)

    xuu, xvv, xuv = Ruu @ P, Rvv @ P, Ruv @ P
    (xu, yu), (xv, yv) = J[:, 0], J[:, 1]
    T = np.array([
        [xu * xu, yu * yu, 2.0 * xu * yu],
        [xv * xv, yv * yv, 2.0 * xv * yv],
        [xu * xv, yu * yv, xu * yv + xv * yu],
    ])
    rhs = np.vstack([Ruu, Rvv, Ruv]) - np.array([xuu, xvv, xuv]) @ dR
    d2R = np.linalg.solve(T, rhs)
    return BasisEval(active, R, dR, d2R, detJ, x)


# --------------------------------------------------------------------------
# refinement


def _insert_knot_1d(kv: KnotVector, Pw: np.ndarray, u: float) -> tuple[KnotVector, np.ndarray]:
    """Boehm insertion of a single knot along axis 0 of ``Pw``."""
    U, p = kv.knots, kv.degree
    k = find_span(kv, u)
    n = kv.n_basis
    Q = np.empty((n + 1,) + Pw.shape[1:])
    Q[: k - p + 1] = Pw[: k - p + 1]
    Q[k + 1:] = Pw[k:]
    for i in range(k - p + 1, k + 1):
        alpha = (u - U[i]) / (U[i + p] - U[i])
        Q[i] = alpha * Pw[i] + (1.0 - alpha) * Pw[i - 1]
    return KnotVector(np.insert(U, k + 1, u), p), Q


def insert_knots(patch: Patch, new_u=(), new_v=()) -> Patch:
    ku, kv = patch.knots_u, patch.knots_v
    Pw = patch.homogeneous()
    for u in new_u:
        ku, Pw = _insert_knot_1d(ku, Pw, float(u))
    Pw = np.swapaxes(Pw, 0, 1)
    for v in new_v:
        kv, Pw = _insert_knot_1d(kv, Pw, float(v))
    Pw = np.swapaxes(Pw, 0, 1)
    return Patch.from_homogeneous(ku, kv, Pw)


def _subdivision_knots(kv: KnotVector, s: int) -> list[float]:
    out = []
    for a, b in kv.spans():
        out.extend(np.linspace(a, b, s + 1)[1:-1])
    return out


def refine_uniform(patch: Patch, subdivisions_u: int, subdivisions_v: int) -> Patch:
    """Split every non-empty span into equal pieces by knot insertion."""
    if subdivisions_u < 1 or subdivisions_v < 1:
        raise ValueError("subdivisions must be >= 1")
    return insert_knots(
        patch,
        _subdivision_knots(patch.knots_u, subdivisions_u),
        _subdivision_knots(patch.knots_v, subdivisions_v),
    )


def _elevate_1d(kv: KnotVector, Pw: np.ndarray, t: int) -> tuple[KnotVector, np.ndarray]:
    if t == 0:
        return kv, Pw
    u, counts = np.unique(kv.knots, return_counts=True)
    counts = counts + t
    new = KnotVector(np.repeat(u, counts), kv.degree + t)
    # the elevated space contains the old one, so collocation at the
    # Greville points of the new space reproduces the curve exactly
    g = new.greville()
    A_new = np.array([basis_all(new, x)[0] for x in g])
    A_old = np.array([basis_all(kv, x)[0] for x in g])
    flat = Pw.reshape(Pw.shape[0], -1)
    Q = np.linalg.solve(A_new, A_old @ flat)
    return new, Q.reshape((new.n_basis,) + Pw.shape[1:])


def elevate_degree(patch: Patch, target_p: int, target_q: int | None = None) -> Patch:
    """Raise the polynomial degree in both directions, geometry unchanged.

    Every distinct knot gains multiplicity equal to the degree increase, so
    inter-element continuity is kept; elevate before refining to obtain
    C^{p-1} meshes.
    """
    if target_q is None:
        target_q = target_p
    p, q = patch.degrees
    if target_p < p or target_q < q:
        raise ValueError(f"target degree ({target_p}, {target_q}) below current ({p}, {q})")
    ku, Pw = _elevate_1d(patch.knots_u, patch.homogeneous(), target_p - p)
    Pw = np.swapaxes(Pw, 0, 1)
    kv, Pw = _elevate_1d(patch.knots_v, Pw, target_q - q)
    return Patch.from_homogeneous(ku, kv, np.swapaxes(Pw, 0, 1))


# --------------------------------------------------------------------------
# canonical geometries


def make_square_patch(a: float, b: float, p: int, elems_u: int, elems_v: int) -> Patch:
    """Rectangle ``[0, a] x [0, b]`` with unit weights and uniform knots."""
    if a <= 0 or b <= 0:
        raise ValueError("plate dimensions must be positive")
    if p < 2:
        raise ValueError(
            f"degree p={p} rejected: the plate kinematics need second derivatives, "
            "which requires C1 basis functions (p >= 2)"
        )
    if elems_u < 1 or elems_v < 1:
        raise ValueError("need at least one element per direction")
    ku, kv = open_uniform(p, elems_u), open_uniform(p, elems_v)
    gx, gy = np.meshgrid(ku.greville() * a, kv.greville() * b, indexing="ij")
    cp = np.stack([gx, gy], axis=-1)
    return Patch(ku, kv, cp, np.ones(gx.shape))


def coarse_disk(R: float) -> Patch:
    """Quadratic 3x3 rational patch covering the disk of radius ``R``.

    The four patch edges are 90-degree arcs; the parametric corners map to
    points where the Jacobian degenerates.
    """
    s = np.sqrt(0.5)
    c = R * s
    cp = np.array([
        [[-c, -c], [-2 * c, 0.0], [-c, c]],
        [[0.0, -2 * c], [0.0, 0.0], [0.0, 2 * c]],
        [[c, -c], [2 * c, 0.0], [c, c]],
    ])
    w = np.array([[1.0, s, 1.0], [s, 1.0, s], [1.0, s, 1.0]])
    kv = KnotVector([0, 0, 0, 1, 1, 1], 2)
    return Patch(kv, kv, cp, w)


def make_circle_patch(R: float, p: int, elems: int) -> Patch:
    if R <= 0:
        raise ValueError("radius must be positive")
    if p < 2:
        raise ValueError(f"degree p={p} rejected: C1 basis functions (p >= 2) are required")
    if elems < 1:
        raise ValueError("need at least one element per direction")
    patch = elevate_degree(coarse_disk(R), p)
    return refine_uniform(patch, elems, elems)


def gauss_area(patch: Patch, npts: int | None = None) -> float:
    """Integral of |J| over the patch with tensor Gauss rules per element."""
    p, q = patch.degrees
    gu, wu = np.polynomial.legendre.leggauss(npts or p + 1)
    gv, wv = np.polynomial.legendre.leggauss(npts or q + 1)
    total = 0.0
    for (a0, a1), (b0, b1) in patch.elements():
        for x, wx in zip(gu, wu):
            for y, wy in zip(gv, wv):
                xi = 0.5 * (a1 - a0) * (x + 1) + a0
                eta = 0.5 * (b1 - b0) * (y + 1) + b0
                be = eval_basis(patch, xi, eta)
                total += abs(be.jacobian_det) * wx * wy * 0.25 * (a1 - a0) * (b1 - b0)
    return total


def inverse_map(patch: Patch, x: float, y: float, tol: float = 1e-12, maxiter: int = 50) -> tuple[float, float]:
    """Parametric coordinates of a physical point by Newton iteration."""
    (u0, u1), (v0, v1) = patch.knots_u.domain, patch.knots_v.domain
    s = np.array([0.5 * (u0 + u1), 0.5 * (v0 + v1)])
    target = np.array([x, y], dtype=float)
    scale = max(1.0, float(np.abs(patch.control_points).max()))
    for _ in range(maxiter):
        be = eval_basis(patch, s[0], s[1])
        r = be.point - target
        if np.linalg.norm(r) <= tol * scale:
            return float(s[0]), float(s[1])
        J = _param_jacobian(patch, s[0], s[1])
        step = np.linalg.solve(J, r)
        s = s - step
        s[0] = min(max(s[0], u0), u1)
        s[1] = min(max(s[1], v0), v1)
    be = eval_basis(patch, s[0], s[1])
    if np.linalg.norm(be.point - target) <= 1e-9 * scale:
        return float(s[0]), float(s[1])
    raise GeometryError(f"point ({x}, {y}) is outside the patch geometry")


def _param_jacobian(patch: Patch, xi: float, eta: float) -> np.ndarray:
    ku, kv = patch.knots_u, patch.knots_v
    Nu = basis_all(ku, xi, 1)
    Nv = basis_all(kv, eta, 1)
    Pw = patch.homogeneous()
    h = np.einsum("i,j,ijk->k", Nu[0], Nv[0], Pw)
    hu = np.einsum("i,j,ijk->k", Nu[1], Nv[0], Pw)
    hv = np.einsum("i,j,ijk->k", Nu[0], Nv[1], Pw)
    xu = (hu[:2] - h[:2] * hu[2] / h[2]) / h[2]
    xv = (hv[:2] - h[:2] * hv[2] / h[2]) / h[2]
    return np.column_stack([xu, xv])
