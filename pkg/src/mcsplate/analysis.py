"""Bending, free-vibration and buckling solves and result scaling."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import scipy.linalg as sla

from .assembly import GlobalSystem
from .material import ConfigurationError, TheoryConfig
from .plate_model import WB, WS
from .splines import Patch, eval_basis, inverse_map


class AnalysisKind(str, Enum):
    BENDING = "bending"
    VIBRATION = "vibration"
    BUCKLING = "buckling"


class SolverError(RuntimeError):
    """A system failed the definiteness its solver requires."""


@dataclass
class SolutionBundle:
    kind: AnalysisKind
    primary_values: np.ndarray
    modes: np.ndarray | None = None
    system: GlobalSystem | None = None
    meta: dict = field(default_factory=dict)

    def full_vector(self, index: int = 0) -> np.ndarray:
        """Solution (or mode ``index``) scattered over every DOF."""
        if self.kind is AnalysisKind.BENDING:
            q = self.modes if self.modes is not None else self.primary_values
        else:
            q = self.modes[:, index]
        return self.system.expand(q)


def solve_bending(system: GlobalSystem) -> SolutionBundle:
    try:
        factor = sla.cho_factor(system.K, lower=True)
    except np.linalg.LinAlgError as exc:
        raise SolverError("stiffness is not positive definite; check the boundary conditions") from exc
    q = sla.cho_solve(factor, system.F)
    res = np.linalg.norm(system.K @ q - system.F)
    scale = np.linalg.norm(system.F)
    if scale and res / scale > 1e-8:
        raise SolverError(f"bending residual {res / scale:.2e} too large")
    return SolutionBundle(AnalysisKind.BENDING, q, q, system)


def evaluate_deflection(solution: SolutionBundle, patch: Patch, theory: TheoryConfig,
                        x: float, y: float, z: float = 0.0) -> float:
    """``w = sum R_A (wb_A + phi(z) ws_A)`` at a physical point."""
    if abs(z) > 0.5 * theory.thickness * (1 + 1e-12):
        raise ValueError(f"z={z} outside the plate thickness")
    xi, eta = inverse_map(patch, x, y)
    be = eval_basis(patch, xi, eta, check_jacobian=False)
    q = solution.full_vector()
    layout = solution.system.layout
    wb = q[layout.index(be.active_indices, WB)]
    ws = q[layout.index(be.active_indices, WS)]
    return float(be.R @ (wb + theory.phi_at(z) * ws))


def _check_spd(A: np.ndarray, name: str):
    try:
        sla.cholesky(A, lower=True)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"{name} is not positive definite") from exc


def solve_vibration(K: np.ndarray, M: np.ndarray, k: int = 6) -> tuple[np.ndarray, np.ndarray]:
    """Lowest ``k`` circular frequencies and M-orthonormal modes."""
    n = K.shape[0]
    k = min(k, n)
    _check_spd(M, "mass matrix")
    # full divide-and-conquer solve: the bisection driver behind subset_by_index
    # loses ~1e-7 relative accuracy on the stiffest disk systems
    lam, modes = sla.eigh(K, M, driver="gvd")
    lam, modes = lam[:k], modes[:, :k]
    if lam[0] < -1e-9 * max(1.0, abs(lam[-1])):
        raise SolverError("negative eigenvalue: stiffness is not positive semi-definite")
    return np.sqrt(np.clip(lam, 0.0, None)), modes


def solve_buckling(K: np.ndarray, Kg: np.ndarray, k: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Smallest ``k`` positive ``lam`` with ``K q = lam (-Kg) q``.

    Solved as ``(-Kg) q = mu K q`` with ``K`` SPD; ``lam = 1 / mu`` for the
    largest positive ``mu``.
    """
    n = K.shape[0]
    _check_spd(K, "stiffness")
    k = min(k, n)
    mu, modes = sla.eigh(-Kg, K, driver="gvd")
    mu, modes = mu[::-1][:k], modes[:, ::-1][:, :k]
    tol = 1e-12 * max(1.0, abs(mu[0]))
    pos = mu > tol
    if not np.any(pos):
        raise SolverError("no positive buckling load in the requested window")
    mu, modes = mu[pos], modes[:, pos]
    lam = 1.0 / mu
    # rescale so that modes^T K modes = I / mu -> modes^T (-Kg) modes = I
    modes = modes / np.sqrt(mu)
    return lam, modes


def dense_generalized_eigenvalues(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Sorted real parts of eig(B^-1 A); used as an independent oracle."""
    vals = np.linalg.eigvals(np.linalg.solve(B, A))
    return np.sort(vals.real)


def distinct_values(values, rel_tol: float = 1e-3) -> list[float]:
    """Collapse ascending values that coincide within ``rel_tol`` (degenerate pairs)."""
    out: list[float] = []
    for v in sorted(values):
        if out and abs(v - out[-1]) <= rel_tol * abs(out[-1]):
            continue
        out.append(float(v))
    return out


# --------------------------------------------------------------------------
# nondimensionalization


class Convention(str, Enum):
    DEFLECTION = "deflection"           # 10 E_ref h^3 w / (q0 a^4)
    FREQUENCY = "frequency"             # omega a^2 / h sqrt(rho_ref / E_ref)
    FREQUENCY_CIRCLE = "frequency_circle"  # omega R^2 sqrt(rho_ref h / D_ref)
    BUCKLING_MODULUS = "buckling_modulus"  # P a^2 / (E_ref h^3)
    BUCKLING_RIGIDITY = "buckling_rigidity"  # P a^2 / D_ref


def nondimensionalize(raw: float, convention: Convention | str, context: dict) -> float:
    """Scale ``raw`` by the factor of ``convention``.

    ``context`` keys: ``h``, ``a`` (in-plane length: side or radius), ``q0``,
    ``E``, ``nu``, ``rho`` of the reference phase.
    """
    convention = Convention(convention)
    try:
        h, a = context["h"], context["a"]
        if convention is Convention.DEFLECTION:
            return raw * 10.0 * context["E"] * h**3 / (context["q0"] * a**4)
        if convention is Convention.FREQUENCY:
            return raw * a**2 / h * math.sqrt(context["rho"] / context["E"])
        D = context["E"] * h**3 / (12.0 * (1.0 - context["nu"] ** 2)) if "nu" in context else None
        if convention is Convention.FREQUENCY_CIRCLE:
            return raw * a**2 * math.sqrt(context["rho"] * h / D)
        if convention is Convention.BUCKLING_MODULUS:
            return raw * a**2 / (context["E"] * h**3)
        return raw * a**2 / D
    except (KeyError, TypeError) as exc:
        raise ConfigurationError(f"convention {convention.value} is missing context constant {exc}") from None
