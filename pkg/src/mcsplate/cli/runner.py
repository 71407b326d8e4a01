"""Case execution, sweeps, convergence studies, verification and mode export."""

from __future__ import annotations

import csv
import io
import math
import os
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from functools import lru_cache

import numpy as np

from ..analysis import (
    AnalysisKind, SolutionBundle, nondimensionalize, solve_bending, solve_buckling, solve_vibration,
)
from ..assembly import BcSpec, GlobalSystem, Load, PatchQuadrature, assemble, load_vector, reduce, resolve_bcs
from ..material import FgmSpec, TheoryConfig, phase, section_matrices
from ..plate_model import DOFS, WB, WS
from ..splines import Patch, eval_basis, make_circle_patch, make_square_patch
from .config import Case, RunConfig
from .references import Reference, references

WORKERS_ENV = "MCSPLATE_WORKERS"
THICKNESS = 1.0
SYSTEM_CACHE_SIZE = 8

PATTERNS = {"biaxial": np.diag([-1.0, -1.0]), "uniaxial": np.diag([-1.0, 0.0])}


class CaseError(RuntimeError):
    """A case failed; the message names the case."""


# ---------------------------------------------------------------------- model


def in_plane_size(case: Case) -> float:
    """Side length (square) or radius (circle) in units of the thickness."""
    return case.a_h * THICKNESS if case.shape == "square" else THICKNESS / case.h_r


@lru_cache(maxsize=16)
def _geometry(key: tuple) -> tuple[Patch, PatchQuadrature]:
    shape, size, p, (eu, ev) = key
    if shape == "square":
        a = size * THICKNESS
        patch = make_square_patch(a, a, p, eu, ev)
    else:
        if eu != ev:
            raise ValueError("circular meshes need equal element counts in both directions")
        patch = make_circle_patch(THICKNESS / size, p, eu)
    return patch, PatchQuadrature.build(patch)


def geometry(case: Case) -> tuple[Patch, PatchQuadrature]:
    return _geometry(case.geometry_key)


def theory_of(case: Case) -> TheoryConfig:
    return TheoryConfig.create(case.kind, case.distribution, case.l_h * THICKNESS, THICKNESS)


def fgm_of(case: Case) -> FgmSpec:
    return FgmSpec(phase(case.metal), phase(case.ceramic), case.n, case.scheme, case.variant)


_systems: OrderedDict = OrderedDict()


def system_key(case: Case) -> tuple:
    return (case.geometry_key, case.kind, case.distribution, case.metal, case.ceramic,
            case.scheme, case.variant, case.n, case.l_h, case.bc, case.pattern)


def reduced_system(case: Case) -> tuple[GlobalSystem, Patch, TheoryConfig]:
    """Constrained system without load; cached across cases sharing stiffness."""
    key = system_key(case)
    patch, quad = geometry(case)
    theory = theory_of(case)
    if key in _systems:
        _systems.move_to_end(key)
        return _systems[key], patch, theory
    section = section_matrices(fgm_of(case), theory)
    full = assemble(patch, section, theory, n0=PATTERNS[case.pattern], quadrature=quad)
    system = reduce(full, resolve_bcs(patch, BcSpec.parse(case.bc)))
    _systems[key] = system
    while len(_systems) > SYSTEM_CACHE_SIZE:
        _systems.popitem(last=False)
    return system, patch, theory


def scale_context(case: Case) -> dict:
    ref = phase(case.ceramic if case.reference == "ceramic" else case.metal)
    return {"h": THICKNESS, "a": in_plane_size(case), "q0": 1.0, "E": ref.E, "nu": ref.nu, "rho": ref.rho}


def solve_case(case: Case) -> tuple[SolutionBundle, Patch, TheoryConfig]:
    system, patch, theory = reduced_system(case)
    if case.analysis == "bending":
        size = in_plane_size(case)
        _, quad = geometry(case)
        load = Load(case.load, 1.0, size, size)
        F = load_vector(quad, theory, load)[system.free]
        loaded = GlobalSystem(system.K, system.M, system.Kg, F, system.free, system.n_total,
                              constrained=system.constrained)
        return solve_bending(loaded), patch, theory
    k = max(case.k, max(case.modes) if case.modes else 0)
    if case.analysis == "vibration":
        values, modes = solve_vibration(system.K, system.M, k)
        kind = AnalysisKind.VIBRATION
    else:
        values, modes = solve_buckling(system.K, system.Kg, k)
        kind = AnalysisKind.BUCKLING
    return SolutionBundle(kind, values, modes, system), patch, theory


def transverse_field(solution: SolutionBundle, patch: Patch, theory: TheoryConfig,
                     xi: float, eta: float, index: int = 0, z: float = 0.0) -> float:
    be = eval_basis(patch, xi, eta, check_jacobian=False)
    q = solution.full_vector(index)
    wb = q[DOFS.index(be.active_indices, WB)]
    ws = q[DOFS.index(be.active_indices, WS)]
    return float(be.R @ (wb + theory.phi_at(z) * ws))


def center_deflection(solution: SolutionBundle, patch: Patch, theory: TheoryConfig) -> float:
    (u0, u1), (v0, v1) = patch.knots_u.domain, patch.knots_v.domain
    return transverse_field(solution, patch, theory, 0.5 * (u0 + u1), 0.5 * (v0 + v1))


def output_name(case: Case) -> str:
    return {"bending": "w_bar", "vibration": "omega_bar", "buckling": "p_bar"}[case.analysis]


def run_case(case: Case) -> dict:
    """Input echo plus nondimensional outputs for one case."""
    try:
        solution, patch, theory = solve_case(case)
        ctx = scale_context(case)
        record = case.echo()
        name = output_name(case)
        if case.analysis == "bending":
            w = center_deflection(solution, patch, theory)
            record[name] = nondimensionalize(w, case.convention, ctx)
        else:
            positions = case.modes or tuple(range(1, case.k + 1))
            values = solution.primary_values
            for j, pos in enumerate(positions, start=1):
                if pos > len(values):
                    raise IndexError(f"mode {pos} requested but only {len(values)} computed")
                record[f"{name}_{j}"] = nondimensionalize(float(values[pos - 1]), case.convention, ctx)
        return record
    except Exception as exc:
        raise CaseError(f"case {case.echo()} failed: {exc}") from exc


# ---------------------------------------------------------------------- pool


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return os.cpu_count() or 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def _run_group(cases: list[Case]) -> list[dict]:
    return [run_case(c) for c in cases]


def run_cases(cases: list[Case], workers: int | None = None) -> list[dict]:
    """Records in input order; cases sharing a geometry run on the same worker."""
    workers = worker_count() if workers is None else workers
    groups: OrderedDict[tuple, list[int]] = OrderedDict()
    for i, c in enumerate(cases):
        groups.setdefault(c.geometry_key, []).append(i)
    for idx in groups.values():
        idx.sort(key=lambda i: (repr(system_key(cases[i])), i))
    results: list[dict | None] = [None] * len(cases)
    batches = [[cases[i] for i in idx] for idx in groups.values()]
    if workers <= 1 or len(batches) <= 1:
        outputs = map(_run_group, batches)
    else:
        pool = ProcessPoolExecutor(max_workers=min(workers, len(batches)))
        outputs = pool.map(_run_group, batches)
    try:
        for idx, recs in zip(groups.values(), outputs):
            for i, r in zip(idx, recs):
                results[i] = r
    finally:
        if workers > 1 and len(batches) > 1:
            pool.shutdown()
    return results


# ---------------------------------------------------------------------- csv


def format_value(v) -> str:
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        return f"{v:.10g}"
    return str(v)


def to_csv(records: list[dict], command: str) -> str:
    """Timestamp header line followed by a deterministic CSV body."""
    columns: list[str] = []
    for r in records:
        columns.extend(c for c in r if c not in columns)
    buf = io.StringIO()
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    buf.write(f"# mcsplate {command} generated {stamp}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in records:
        writer.writerow([format_value(r.get(c, "")) for c in columns])
    return buf.getvalue()


def csv_body(text: str) -> str:
    """CSV text without its timestamp line."""
    return text.split("\n", 1)[1] if text.startswith("#") else text


# ---------------------------------------------------------------------- commands


def run(config: RunConfig, workers: int | None = None) -> list[dict]:
    return run_cases(config.expand(), workers)


CONVERGENCE_TOL = 1e-3


def converge(config: RunConfig, workers: int | None = None) -> list[dict]:
    """Per-mesh results with relative change to the previous mesh of the same sweep point."""
    meshes = config.meshes or []
    if len(meshes) < 2:
        raise ValueError("converge needs at least two meshes")
    per_mesh = [config.expand(m) for m in meshes]
    flat = [c for cases in per_mesh for c in cases]
    records = run_cases(flat, workers)
    n_points = len(per_mesh[0])
    out = []
    for point in range(n_points):
        prev = None
        for mi in range(len(meshes)):
            rec = dict(records[mi * n_points + point])
            key = next(k for k in rec if k.startswith(("w_bar", "omega_bar", "p_bar")))
            val = rec[key]
            if prev is None:
                rec["rel_change"] = float("nan")
                rec["converged"] = False
            else:
                change = abs(val - prev) / abs(prev)
                rec["rel_change"] = change
                rec["converged"] = bool(change < CONVERGENCE_TOL)
            prev = val
            out.append(rec)
    return out


@dataclass(frozen=True)
class ModeGrid:
    x: np.ndarray
    y: np.ndarray
    w: np.ndarray
    value: float

    def to_records(self) -> list[dict]:
        return [{"x": float(a), "y": float(b), "w": float(c)}
                for a, b, c in zip(self.x.ravel(), self.y.ravel(), self.w.ravel())]


def export_mode_grid(solution: SolutionBundle, patch: Patch, theory: TheoryConfig,
                     mode: int, grid: int) -> ModeGrid:
    """Mode ``mode`` (1-based) sampled on a uniform ``grid x grid`` parametric lattice, max |w| = 1."""
    if solution.kind is AnalysisKind.BENDING or solution.modes is None:
        raise ValueError("mode export needs a vibration or buckling solution")
    if not 1 <= mode <= solution.modes.shape[1]:
        raise IndexError(f"mode {mode} out of range 1..{solution.modes.shape[1]}")
    if grid < 2:
        raise ValueError("grid must be >= 2")
    (u0, u1), (v0, v1) = patch.knots_u.domain, patch.knots_v.domain
    us, vs = np.linspace(u0, u1, grid), np.linspace(v0, v1, grid)
    xy = np.array([[patch.map(u, v) for v in vs] for u in us])
    w = np.array([[transverse_field(solution, patch, theory, u, v, mode - 1) for v in vs] for u in us])
    peak = w.flat[np.argmax(np.abs(w))]
    w = w / peak if peak != 0 else w
    return ModeGrid(xy[..., 0], xy[..., 1], w, float(solution.primary_values[mode - 1]))


def verify(tables=None, workers: int | None = None) -> list[dict]:
    """Compare every reference cell of ``tables`` against a fresh computation."""
    refs: list[Reference] = references(tables)
    unique = list(dict.fromkeys(r.case for r in refs))
    computed = dict(zip(unique, run_cases(unique, workers)))
    rows = []
    for r in refs:
        value = float(computed[r.case][r.output])
        err = abs(value - r.value) / abs(r.value)
        status = "SKIPPED" if r.skip else ("PASS" if err <= r.tolerance else "FAIL")
        rows.append({
            "table": r.table, "key": r.key_label, "column": r.column, "reference": r.value,
            "computed": value, "rel_error": err, "tolerance": r.tolerance, "status": status,
        })
    return rows
