"""Functionally graded materials and through-thickness section integrals."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np


class ConfigurationError(ValueError):
    """Unknown catalog entry or inconsistent analysis set-up."""


@dataclass(frozen=True)
class PhaseProperties:
    E: float
    nu: float
    rho: float
    name: str = ""

    def __post_init__(self):
        if self.E <= 0 or self.rho <= 0 or not (0.0 <= self.nu < 0.5):
            raise ValueError(f"invalid phase properties {self}")

    @property
    def G(self) -> float:
        return self.E / (2.0 * (1.0 + self.nu))

    @property
    def K(self) -> float:
        return self.E / (3.0 * (1.0 - 2.0 * self.nu))

    def flexural_rigidity(self, h: float) -> float:
        return self.E * h**3 / (12.0 * (1.0 - self.nu**2))


PHASES: dict[str, PhaseProperties] = {
    "Al": PhaseProperties(70e9, 0.3, 2702.0, "Al"),
    "Al2O3": PhaseProperties(380e9, 0.3, 3800.0, "Al2O3"),
    "ZrO2-1": PhaseProperties(200e9, 0.3, 5700.0, "ZrO2-1"),
    "ZrO2-2": PhaseProperties(151e9, 0.3, 3000.0, "ZrO2-2"),
    # two-phase benchmark used for the biaxial buckling comparison
    "Bench-1": PhaseProperties(14.4e9, 0.38, 12.2e3, "Bench-1"),
    "Bench-2": PhaseProperties(1.44e9, 0.38, 1.22e3, "Bench-2"),
}


def phase(name: str) -> PhaseProperties:
    try:
        return PHASES[name]
    except KeyError:
        raise ConfigurationError(f"unknown phase {name!r}; known: {sorted(PHASES)}") from None


class Scheme(str, Enum):
    RULE_OF_MIXTURES = "rule_of_mixtures"
    MORI_TANAKA = "mori_tanaka"


class Variant(str, Enum):
    CERAMIC_TOP = "ceramic_top"
    METAL_TOP = "metal_top"


@dataclass(frozen=True)
class FgmSpec:
    metal: PhaseProperties
    ceramic: PhaseProperties
    n: float = 0.0
    scheme: Scheme = Scheme.RULE_OF_MIXTURES
    variant: Variant = Variant.CERAMIC_TOP

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("material index n must be >= 0")
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        object.__setattr__(self, "variant", Variant(self.variant))


def volume_fraction(spec: FgmSpec, z, h: float):
    """Ceramic volume fraction V_c at thickness coordinate ``z``."""
    z = np.asarray(z, dtype=float)
    if np.any(np.abs(z) > 0.5 * h * (1 + 1e-12)):
        raise ValueError(f"z outside [-h/2, h/2] for h={h}")
    t = np.clip(z / h, -0.5, 0.5)
    if spec.variant is Variant.CERAMIC_TOP:
        vc = np.power(0.5 + t, spec.n)
    else:
        vc = 1.0 - np.power(0.5 - t, spec.n)
    return vc if vc.ndim else float(vc)


def effective_properties(spec: FgmSpec, z, h: float):
    """``(E, nu, rho, G)`` at ``z`` under the homogenization scheme of ``spec``."""
    vc = np.asarray(volume_fraction(spec, z, h), dtype=float)
    vm = 1.0 - vc
    m, c = spec.metal, spec.ceramic
    rho = m.rho * vm + c.rho * vc
    if spec.scheme is Scheme.RULE_OF_MIXTURES:
        E = m.E * vm + c.E * vc
        nu = m.nu * vm + c.nu * vc
    else:
        Km, Gm, Kc, Gc = m.K, m.G, c.K, c.G
        f1 = Gm * (9.0 * Km + 8.0 * Gm) / (6.0 * (Km + 2.0 * Gm))
        K = Km + (Kc - Km) * vc / (1.0 + vm * (Kc - Km) / (Km + 4.0 / 3.0 * Gm))
        G = Gm + (Gc - Gm) * vc / (1.0 + vm * (Gc - Gm) / (Gm + f1))
        E = 9.0 * K * G / (3.0 * K + G)
        nu = (3.0 * K - 2.0 * G) / (2.0 * (3.0 * K + G))
    G = E / (2.0 * (1.0 + nu))
    if np.ndim(E) == 0:
        return float(E), float(nu), float(rho), float(G)
    return E, nu, rho, G


# --------------------------------------------------------------------------
# distribution functions


@dataclass(frozen=True)
class Distribution:
    """Through-thickness shape functions for a fixed thickness ``h``.

    ``phi``/``dphi`` are ``None`` for entries that only make sense with the
    refined plate kinematics (no thickness stretching).
    """

    name: str
    h: float
    f: Callable
    df: Callable
    d2f: Callable
    phi: Callable | None = None
    dphi: Callable | None = None


def _present(h):
    f = lambda z: -8 * z + 10 * z**3 / h**2 + 6 * z**5 / (5 * h**4) + 8 * z**7 / (7 * h**6)
    df = lambda z: -8 + 30 * z**2 / h**2 + 6 * z**4 / h**4 + 8 * z**6 / h**6
    d2f = lambda z: 60 * z / h**2 + 24 * z**3 / h**4 + 48 * z**5 / h**6
    return f, df, d2f


def distribution_catalog(name: str, h: float) -> Distribution:
    pi = math.pi
    if name == "ReddyRPT":
        return Distribution(
            name, h,
            lambda z: z - 4 * z**3 / (3 * h**2),
            lambda z: 1 - 4 * z**2 / h**2,
            lambda z: -8 * z / h**2,
        )
    if name == "ArctanRPT":
        s = lambda z: np.sin(pi * z / h)
        c = lambda z: np.cos(pi * z / h)
        k = pi / h
        return Distribution(
            name, h,
            lambda z: np.arctan(s(z)),
            lambda z: k * c(z) / (1 + s(z) ** 2),
            lambda z: -k**2 * s(z) * (2 + c(z) ** 2) / (1 + s(z) ** 2) ** 2,
        )
    if name == "SinQuasi3D":
        k = pi / h
        df = lambda z: np.cos(k * z) - 1
        return Distribution(
            name, h,
            lambda z: np.sin(k * z) / k - z,
            df,
            lambda z: -k * np.sin(k * z),
            phi=lambda z: df(z) + 1,
            dphi=lambda z: -k * np.sin(k * z),
        )
    if name == "SinhQuasi3D":
        ch = math.cosh(0.5)
        df = lambda z: np.cosh(z / h) - 4 * z**2 / h**2 * ch
        d2f = lambda z: np.sinh(z / h) / h - 8 * z / h**2 * ch
        return Distribution(
            name, h,
            lambda z: h * np.sinh(z / h) - 4 * z**3 / (3 * h**2) * ch,
            df, d2f,
            phi=lambda z: df(z) / 12,
            dphi=lambda z: d2f(z) / 12,
        )
    if name == "FifthOrderQuasi3D":
        df = lambda z: pi / h - 27 * pi / (5 * h**3) * z**2 + 28 * pi / (5 * h**5) * z**4
        d2f = lambda z: -54 * pi / (5 * h**3) * z + 112 * pi / (5 * h**5) * z**3
        return Distribution(
            name, h,
            lambda z: pi / h * z - 9 * pi / (5 * h**3) * z**3 + 28 * pi / (25 * h**5) * z**5,
            df, d2f,
            phi=lambda z: df(z) / 8,
            dphi=lambda z: d2f(z) / 8,
        )
    if name == "PresentRPT":
        return Distribution(name, h, *_present(h))
    if name == "PresentQuasi3D":
        f, df, d2f = _present(h)
        return Distribution(
            name, h, f, df, d2f,
            phi=lambda z: 0.15 * df(z),
            dphi=lambda z: 0.15 * d2f(z),
        )
    raise ConfigurationError(f"unknown distribution function {name!r}; known: {DISTRIBUTIONS}")


DISTRIBUTIONS = (
    "ReddyRPT", "ArctanRPT", "SinQuasi3D", "SinhQuasi3D",
    "FifthOrderQuasi3D", "PresentRPT", "PresentQuasi3D",
)


class Kind(str, Enum):
    RPT = "rpt"
    QUASI3D = "quasi3d"


@dataclass(frozen=True)
class TheoryConfig:
    """Kinematic model: ``u = u0 - z wb,x + F(z) ws,x``, ``w = wb + Phi(z) ws``.

    For the refined plate theory ``F = f - z`` and ``Phi = 1`` so that the
    transverse shear strain is ``f'(z) grad(ws)``; for quasi-3D ``F = f`` and
    ``Phi = phi`` from the catalog entry.
    """

    kind: Kind
    distribution: Distribution
    length_scale: float = 0.0
    thickness: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.QUASI3D and self.distribution.phi is None:
            raise ConfigurationError(
                f"distribution {self.distribution.name!r} has no thickness function; "
                "it cannot drive the quasi-3D model"
            )
        if self.length_scale < 0 or self.thickness <= 0:
            raise ValueError("length scale must be >= 0 and thickness > 0")
        if not math.isclose(self.distribution.h, self.thickness, rel_tol=1e-12):
            raise ConfigurationError("distribution thickness differs from theory thickness")

    @classmethod
    def create(cls, kind, name: str, l: float = 0.0, h: float = 1.0) -> "TheoryConfig":
        return cls(Kind(kind), distribution_catalog(name, h), l, h)

    def shape(self, z):
        """``(F, F', F'', Phi, Phi')`` evaluated at ``z``."""
        z = np.asarray(z, dtype=float)
        d = self.distribution
        f, df, d2f = d.f(z) + 0 * z, d.df(z) + 0 * z, d.d2f(z) + 0 * z
        if self.kind is Kind.RPT:
            return f - z, df - 1.0, d2f, np.ones_like(z), np.zeros_like(z)
        return f, df, d2f, d.phi(z) + 0 * z, d.dphi(z) + 0 * z

    def phi_at(self, z: float) -> float:
        return float(self.shape(np.array([z]))[3][0])

    @property
    def phi0(self) -> float:
        return self.phi_at(0.0)

    @property
    def phi_top(self) -> float:
        return self.phi_at(0.5 * self.thickness)


# --------------------------------------------------------------------------
# section matrices

N_SECTION_POINTS = 50


@dataclass(frozen=True)
class SectionMatrices:
    A: np.ndarray
    B: np.ndarray
    D: np.ndarray
    E: np.ndarray
    F: np.ndarray
    H: np.ndarray
    X: np.ndarray
    Yb: np.ndarray
    Ys: np.ndarray
    Z33: float
    Ds: np.ndarray
    Ac: np.ndarray
    Bc: np.ndarray
    Dc: np.ndarray
    Ec: np.ndarray
    Fc: np.ndarray
    Hc: np.ndarray
    Xc: np.ndarray
    Yc: np.ndarray
    Zc: np.ndarray
    Tc: np.ndarray
    Vc: np.ndarray
    Wc: np.ndarray
    inertia: np.ndarray  # I1..I8
    thickness: float
    kind: Kind = Kind.RPT
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def Db(self) -> np.ndarray:
        """10x10 constitutive block pairing (eps0, kappa_b, kappa_s, w_s)."""
        A, B, D, E, F, H = self.A, self.B, self.D, self.E, self.F, self.H
        X, Yb, Ys = (v.reshape(3, 1) for v in (self.X, self.Yb, self.Ys))
        return np.block([
            [A, B, E, X],
            [B, D, F, Yb],
            [E, F, H, Ys],
            [X.T, Yb.T, Ys.T, np.array([[self.Z33]])],
        ])

    @property
    def Dcb(self) -> np.ndarray:
        return np.block([
            [self.Ac, self.Bc, self.Ec],
            [self.Bc, self.Dc, self.Fc],
            [self.Ec, self.Fc, self.Hc],
        ])

    @property
    def Dcs(self) -> np.ndarray:
        return np.block([
            [self.Xc, self.Yc, self.Tc],
            [self.Yc, self.Zc, self.Vc],
            [self.Tc, self.Vc, self.Wc],
        ])

    @property
    def mass(self) -> np.ndarray:
        """9x9 inertia matrix acting on (u0, -wb,x, ws,x, v0, -wb,y, ws,y, wb, ws, 0)."""
        I1, I2, I3, I4, I5, I6, I7, I8 = self.inertia
        I0 = np.array([[I1, I2, I4], [I2, I3, I5], [I4, I5, I6]])
        Iw = np.array([[I1, I7, 0.0], [I7, I8, 0.0], [0.0, 0.0, 0.0]])
        Z = np.zeros((3, 3))
        return np.block([[I0, Z, Z], [Z, I0, Z], [Z, Z, Iw]])


def _elastic_constants(E, nu, kind: Kind):
    if kind is Kind.QUASI3D:
        den = (1 - 2 * nu) * (1 + nu)
        Q11 = (1 - nu) * E / den
        Q12 = nu * E / den
        Q33, Q13 = Q11, Q12
    else:
        Q11 = E / (1 - nu**2)
        Q12 = nu * E / (1 - nu**2)
        Q33, Q13 = 0.0 * E, 0.0 * E
    G = E / (2 * (1 + nu))
    return Q11, Q12, Q13, Q33, G


SINGULAR_MAP_POWER = 4


def thickness_rule(spec: FgmSpec, h: float, n_points: int = N_SECTION_POINTS):
    """Gauss-Legendre points and weights on ``[-h/2, h/2]``.

    A fractional index makes the grading ``t**n`` singular at the metal
    surface; there the rule is applied in ``u`` with ``t = u**4`` so that
    the integrand is smooth (polynomial for n = 1/2).
    """
    xg, wg = np.polynomial.legendre.leggauss(n_points)
    if float(spec.n).is_integer():
        return 0.5 * h * xg, 0.5 * h * wg
    m = SINGULAR_MAP_POWER
    u, wu = 0.5 * (xg + 1.0), 0.5 * wg
    t = u**m
    wz = h * m * u ** (m - 1) * wu
    z = h * (t - 0.5) if spec.variant is Variant.CERAMIC_TOP else h * (0.5 - t)
    return z, wz


def section_matrices(spec: FgmSpec, theory: TheoryConfig, n_points: int = N_SECTION_POINTS) -> SectionMatrices:
    """Integrate every constitutive and inertia quantity over the thickness."""
    h, l = theory.thickness, theory.length_scale
    z, wz = thickness_rule(spec, h, n_points)

    E, nu, rho, _ = effective_properties(spec, z, h)
    Q11, Q12, Q13, Q33, G = _elastic_constants(E, nu, theory.kind)
    F, dF, d2F, Phi, dPhi = theory.shape(z)

    Qbar = np.zeros((n_points, 3, 3))
    Qbar[:, 0, 0] = Qbar[:, 1, 1] = Q11
    Qbar[:, 0, 1] = Qbar[:, 1, 0] = Q12
    Qbar[:, 2, 2] = G
    Qtil = np.zeros((n_points, 3))
    Qtil[:, 0] = Qtil[:, 1] = Q13
    Qhat = G[:, None, None] * np.eye(2)
    Gc = 2.0 * G * l**2

    def integ(weight, mat):
        return np.tensordot(wz * weight, mat, axes=(0, 0))

    I3m, I2m = np.eye(3), np.eye(2)
    return SectionMatrices(
        A=integ(1.0 + 0 * z, Qbar),
        B=integ(z, Qbar),
        D=integ(z**2, Qbar),
        E=integ(F, Qbar),
        F=integ(z * F, Qbar),
        H=integ(F**2, Qbar),
        X=integ(dPhi, Qtil),
        Yb=integ(z * dPhi, Qtil),
        Ys=integ(F * dPhi, Qtil),
        Z33=float(np.sum(wz * dPhi**2 * Q33)),
        Ds=integ((dF + Phi) ** 2, Qhat),
        Ac=float(np.sum(wz * Gc)) * I3m,
        Bc=float(np.sum(wz * Gc * dF)) * I3m,
        Dc=float(np.sum(wz * Gc * dF**2)) * I3m,
        Ec=float(np.sum(wz * Gc * Phi)) * I3m,
        Fc=float(np.sum(wz * Gc * dF * Phi)) * I3m,
        Hc=float(np.sum(wz * Gc * Phi**2)) * I3m,
        Xc=float(np.sum(wz * Gc)) * I2m,
        Yc=float(np.sum(wz * Gc * d2F)) * I2m,
        Zc=float(np.sum(wz * Gc * d2F**2)) * I2m,
        Tc=float(np.sum(wz * Gc * dPhi)) * I2m,
        Vc=float(np.sum(wz * Gc * d2F * dPhi)) * I2m,
        Wc=float(np.sum(wz * Gc * dPhi**2)) * I2m,
        inertia=np.array([
            np.sum(wz * rho * v) for v in (1.0 + 0 * z, z, z**2, F, z * F, F**2, Phi, Phi**2)
        ]),
        thickness=h,
        kind=theory.kind,
    )
