"""Run configuration: YAML schema, validation, sweep expansion."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from ..analysis import Convention
from ..assembly import BcSpec, LoadKind
from ..material import DISTRIBUTIONS, PHASES, ConfigurationError, Kind, Scheme, Variant

SHAPES = ("square", "circle")
ANALYSES = ("bending", "vibration", "buckling")
PATTERNS = ("biaxial", "uniaxial")
REFERENCE_PHASES = ("metal", "ceramic")


class ConfigError(ConfigurationError):
    """Invalid configuration; the message starts with the offending field path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class Case:
    """One fully specified analysis (a single sweep point)."""

    shape: str = "square"
    a_h: float = 20.0
    h_r: float = 0.2
    degree: int = 3
    mesh: tuple[int, int] = (11, 11)
    kind: str = "rpt"
    distribution: str = "PresentRPT"
    metal: str = "Al"
    ceramic: str = "Al2O3"
    scheme: str = "rule_of_mixtures"
    variant: str = "ceramic_top"
    n: float = 0.0
    l_h: float = 0.0
    bc: str = "SSSS"
    analysis: str = "bending"
    load: str = "sinusoidal"
    k: int = 6
    pattern: str = "biaxial"
    modes: tuple[int, ...] | None = None
    convention: str = "deflection"
    reference: str = "ceramic"

    @property
    def geometry_key(self) -> tuple:
        size = self.a_h if self.shape == "square" else self.h_r
        return (self.shape, size, self.degree, self.mesh)

    @property
    def size_label(self) -> str:
        return "a_h" if self.shape == "square" else "h_r"

    def echo(self) -> dict[str, Any]:
        """Input columns for CSV records."""
        out: dict[str, Any] = {"shape": self.shape}
        out[self.size_label] = self.a_h if self.shape == "square" else self.h_r
        out.update(
            degree=self.degree, mesh=f"{self.mesh[0]}x{self.mesh[1]}", kind=self.kind,
            distribution=self.distribution, metal=self.metal, ceramic=self.ceramic,
            scheme=self.scheme, variant=self.variant, n=self.n, l_h=self.l_h, bc=self.bc,
            analysis=self.analysis,
        )
        if self.analysis == "bending":
            out["load"] = self.load
        elif self.analysis == "buckling":
            out["pattern"] = self.pattern
        out["convention"] = self.convention
        out["reference"] = self.reference
        return out


def _default_convention(shape: str, analysis: str) -> tuple[str, str]:
    if analysis == "bending":
        return Convention.DEFLECTION.value, "ceramic"
    if analysis == "vibration":
        return (Convention.FREQUENCY if shape == "square" else Convention.FREQUENCY_CIRCLE).value, "ceramic"
    return Convention.BUCKLING_RIGIDITY.value, "metal"


def _as_list(value, path: str, cast=float) -> list:
    values = value if isinstance(value, (list, tuple)) else [value]
    if not values:
        raise ConfigError(path, "empty sweep list")
    try:
        return [cast(v) for v in values]
    except (TypeError, ValueError):
        raise ConfigError(path, f"expected number(s), got {value!r}") from None


def _choice(value, options, path: str) -> str:
    if value not in options:
        raise ConfigError(path, f"{value!r} not one of {list(options)}")
    return value


def _mesh(value, path: str) -> tuple[int, int]:
    if isinstance(value, int):
        value = [value, value]
    if not (isinstance(value, (list, tuple)) and len(value) == 2 and all(isinstance(v, int) and v >= 1 for v in value)):
        raise ConfigError(path, f"expected [e_u, e_v] with positive integers, got {value!r}")
    return (int(value[0]), int(value[1]))


@dataclass
class RunConfig:
    """Parsed configuration; list-valued ``a_h``/``h_r``, ``n`` and ``l_h`` are sweeps."""

    shape: str = "square"
    sizes: list[float] = field(default_factory=lambda: [20.0])
    degree: int = 3
    mesh: tuple[int, int] = (11, 11)
    meshes: list[tuple[int, int]] | None = None
    kind: str = "rpt"
    distribution: str = "PresentRPT"
    metal: str = "Al"
    ceramic: str = "Al2O3"
    scheme: str = "rule_of_mixtures"
    variant: str = "ceramic_top"
    n: list[float] = field(default_factory=lambda: [0.0])
    l_h: list[float] = field(default_factory=lambda: [0.0])
    bc: str = "SSSS"
    analysis: str = "bending"
    load: str = "sinusoidal"
    k: int = 6
    pattern: str = "biaxial"
    modes: list[int] | None = None
    convention: str | None = None
    reference: str | None = None
    output: str | None = None

    # ------------------------------------------------------------------ parse

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigError("<root>", "configuration must be a mapping")
        known = {"geometry", "degree", "mesh", "meshes", "theory", "material", "l_h", "length_scale",
                 "bc", "analysis", "nondim", "output"}
        for key in data:
            if key not in known:
                raise ConfigError(key, "unknown field")
        cfg = cls()

        geom = data.get("geometry", {}) or {}
        cfg.shape = _choice(geom.get("shape", "square"), SHAPES, "geometry.shape")
        size_key = "a_h" if cfg.shape == "square" else "h_r"
        if size_key not in geom:
            raise ConfigError(f"geometry.{size_key}", f"required for a {cfg.shape}")
        cfg.sizes = _as_list(geom[size_key], f"geometry.{size_key}")
        if any(v <= 0 for v in cfg.sizes):
            raise ConfigError(f"geometry.{size_key}", "must be positive")
        thickness = geom.get("h")

        cfg.degree = data.get("degree", 3)
        if not isinstance(cfg.degree, int) or cfg.degree < 2:
            raise ConfigError("degree", "must be an integer >= 2")
        cfg.mesh = _mesh(data.get("mesh", [11, 11]), "mesh")
        if "meshes" in data:
            cfg.meshes = [_mesh(m, f"meshes[{i}]") for i, m in enumerate(data["meshes"] or [])]

        th = data.get("theory", {}) or {}
        cfg.kind = _choice(th.get("kind", "rpt"), [k.value for k in Kind], "theory.kind")
        cfg.distribution = _choice(th.get("distribution", "PresentRPT"), DISTRIBUTIONS, "theory.distribution")
        if cfg.kind == Kind.QUASI3D.value and not cfg.distribution.endswith("Quasi3D"):
            raise ConfigError("theory.distribution", f"{cfg.distribution} has no thickness function for quasi3d")

        mat = data.get("material", {}) or {}
        cfg.metal = _choice(mat.get("metal", "Al"), PHASES, "material.metal")
        cfg.ceramic = _choice(mat.get("ceramic", "Al2O3"), PHASES, "material.ceramic")
        cfg.scheme = _choice(mat.get("scheme", "rule_of_mixtures"), [s.value for s in Scheme], "material.scheme")
        cfg.variant = _choice(mat.get("variant", "ceramic_top"), [v.value for v in Variant], "material.variant")
        cfg.n = _as_list(mat.get("n", 0.0), "material.n")
        if any(v < 0 for v in cfg.n):
            raise ConfigError("material.n", "must be >= 0")

        if "l_h" in data and "length_scale" in data:
            raise ConfigError("length_scale", "give either l_h or length_scale, not both")
        if "length_scale" in data:
            if thickness is None:
                raise ConfigError("geometry.h", "absolute length_scale needs the absolute thickness geometry.h")
            ls = _as_list(data["length_scale"], "length_scale")
            cfg.l_h = [v / float(thickness) for v in ls]
        else:
            cfg.l_h = _as_list(data.get("l_h", 0.0), "l_h")
        if any(v < 0 for v in cfg.l_h):
            raise ConfigError("l_h", "must be >= 0")

        cfg.bc = str(data.get("bc", "SSSS" if cfg.shape == "square" else "SS"))
        try:
            parsed = BcSpec.parse(cfg.bc)
        except ConfigurationError as exc:
            raise ConfigError("bc", str(exc)) from None
        if (parsed.disk is not None) != (cfg.shape == "circle"):
            raise ConfigError("bc", f"{cfg.bc!r} does not apply to a {cfg.shape}")

        an = data.get("analysis", {}) or {}
        cfg.analysis = _choice(an.get("type", "bending"), ANALYSES, "analysis.type")
        cfg.load = _choice(an.get("load", "sinusoidal"), [k.value for k in LoadKind], "analysis.load")
        cfg.k = an.get("k", 6 if cfg.analysis == "vibration" else 1)
        if not isinstance(cfg.k, int) or cfg.k < 1:
            raise ConfigError("analysis.k", "must be a positive integer")
        cfg.pattern = _choice(an.get("pattern", "biaxial"), PATTERNS, "analysis.pattern")
        if "modes" in an:
            modes = an["modes"]
            if not (isinstance(modes, list) and modes and all(isinstance(m, int) and m >= 1 for m in modes)):
                raise ConfigError("analysis.modes", "expected a list of 1-based mode positions")
            cfg.modes = list(modes)

        nd = data.get("nondim", {}) or {}
        conv, ref = _default_convention(cfg.shape, cfg.analysis)
        cfg.convention = _choice(nd.get("convention", conv), [c.value for c in Convention], "nondim.convention")
        cfg.reference = _choice(nd.get("reference", ref), REFERENCE_PHASES, "nondim.reference")

        out = data.get("output")
        cfg.output = None if out is None else str(out)
        return cfg

    def to_dict(self) -> dict:
        size_key = "a_h" if self.shape == "square" else "h_r"
        unwrap = lambda xs: xs[0] if len(xs) == 1 else list(xs)
        analysis: dict[str, Any] = {"type": self.analysis}
        if self.analysis == "bending":
            analysis["load"] = self.load
        else:
            analysis["k"] = self.k
        if self.analysis == "buckling":
            analysis["pattern"] = self.pattern
        if self.modes is not None:
            analysis["modes"] = list(self.modes)
        out: dict[str, Any] = {
            "geometry": {"shape": self.shape, size_key: unwrap(self.sizes)},
            "degree": self.degree,
            "mesh": list(self.mesh),
        }
        if self.meshes is not None:
            out["meshes"] = [list(m) for m in self.meshes]
        out.update({
            "theory": {"kind": self.kind, "distribution": self.distribution},
            "material": {"metal": self.metal, "ceramic": self.ceramic, "scheme": self.scheme,
                         "variant": self.variant, "n": unwrap(self.n)},
            "l_h": unwrap(self.l_h),
            "bc": self.bc,
            "analysis": analysis,
            "nondim": {"convention": self.convention, "reference": self.reference},
        })
        if self.output is not None:
            out["output"] = self.output
        return out

    # ------------------------------------------------------------------ sweeps

    def expand(self, mesh: tuple[int, int] | None = None) -> list[Case]:
        """Cases in sweep order: size outermost, then l/h, then n."""
        cases = []
        for size, l_h, n in itertools.product(self.sizes, self.l_h, self.n):
            geom = {"a_h": size} if self.shape == "square" else {"h_r": size}
            cases.append(Case(
                shape=self.shape, degree=self.degree, mesh=mesh or self.mesh,
                kind=self.kind, distribution=self.distribution,
                metal=self.metal, ceramic=self.ceramic, scheme=self.scheme, variant=self.variant,
                n=n, l_h=l_h, bc=self.bc, analysis=self.analysis, load=self.load, k=self.k,
                pattern=self.pattern, modes=None if self.modes is None else tuple(self.modes),
                convention=self.convention, reference=self.reference, **geom,
            ))
        return cases


def loads(text: str) -> RunConfig:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError("<yaml>", str(exc)) from None
    return RunConfig.from_dict(data or {})


def dumps(cfg: RunConfig) -> str:
    return yaml.safe_dump(cfg.to_dict(), sort_keys=False, default_flow_style=None)


def load(path: str | Path) -> RunConfig:
    return loads(Path(path).read_text())


def dump(cfg: RunConfig, path: str | Path):
    Path(path).write_text(dumps(cfg))
