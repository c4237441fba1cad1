"""
============================================================================
Half-Pass: Spectral-Galerkin Multiplicity Toolkit
============================================================================

MISSION - NEVER TO BE VIOLATED:
    Compute → Evaluate the half-Laplacian and its harmonic extension exactly
    Certify → Check every explicit constant before trusting a parameter window
    Locate  → Find both minima and the mountain-pass point numerically
    Report  → Write reproducible, bit-identical reports and grids

============================================================================
Run Configuration Manager
----------------------------------------------------------------------------
FILE VERSION: v1.0-5-5.3-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 5 - Command Line
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- Parse the sectioned `key = value` run format (UTF-8, `#` comments)
- Validate it into pydantic models that reject unknown keys
- Build domain, weight and nonlinearity objects from a RunConfig
- Echo a RunConfig back into the same grammar for reports

GRAMMAR:
    [domain]
    kind = disk
    radius = 1
    [nonlinearity]
    kind = truncated      # comment
    base = bump
    sizes = pi, 2*pi      # products/quotients with the token pi
    lambda = auto

USAGE:
    manager = create_run_config_manager("run.cfg")
    domain = manager.build_domain()
"""

import logging
import math
import re
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.errors import ConfigError
from src.spectral.spectral_basis import DomainSpec
from src.variational.energy import (
    BetaField,
    GrowthCertificate,
    Nonlinearity,
    SubquadraticCertificate,
)

# Module version
__version__ = "v1.0-5-5.3-1"

# Initialize logger
logger = logging.getLogger(__name__)

AUTO = "auto"

SECTION_PATTERN = re.compile(r"^\[\s*([A-Za-z_][\w.]*)\s*\]$")
NUMBER_PATTERN = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")

AutoFloat = Union[float, Literal["auto"]]


# =============================================================================
# Value parsing
# =============================================================================


def _parse_number(token: str) -> Optional[float]:
    """Numbers, `pi`, and products/quotients of them (`2*pi`, `pi/2`, `-pi`)."""
    expr = token.replace(" ", "").lower()
    if not expr:
        return None
    sign = 1.0
    if expr[0] in "+-":
        sign = -1.0 if expr[0] == "-" else 1.0
        expr = expr[1:]
    factors = re.split(r"([*/])", expr)
    value: Optional[float] = None
    op = "*"
    for part in factors:
        if part in ("*", "/"):
            op = part
            continue
        if part == "pi":
            number = math.pi
        elif NUMBER_PATTERN.match(part):
            number = float(part)
        else:
            return None
        if value is None:
            value = number
        elif op == "*":
            value *= number
        else:
            value /= number
    return None if value is None else sign * value


def parse_value(raw: str) -> Any:
    """One right-hand side: bool, auto, number, comma list, or a bare string."""
    text = raw.strip()
    if "," in text:
        return [parse_value(item) for item in text.split(",") if item.strip()]
    lowered = text.lower()
    if lowered in ("true", "false"):
        return lowered == "true"
    if lowered == AUTO:
        return AUTO
    number = _parse_number(text)
    return number if number is not None else text


def format_value(value: Any) -> str:
    """Inverse of parse_value for everything a RunConfig holds."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ", ".join(format_value(v) for v in value)
    return str(value)


def parse_sections(text: str, prefix: str = "") -> Dict[str, Dict[str, Any]]:
    """
    Split text into {section: {key: value}}.

    With a prefix (e.g. "config."), only sections carrying it are kept and
    the prefix is stripped; everything else is ignored.

    Raises:
        ConfigError: malformed line, key outside a section, duplicate key
    """
    sections: Dict[str, Dict[str, Any]] = {}
    current: Optional[str] = None
    skipping = False
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        header = SECTION_PATTERN.match(content)
        if header:
            name = header.group(1)
            if prefix:
                skipping = not name.startswith(prefix)
                name = name[len(prefix):]
            if skipping:
                continue
            if name in sections:
                raise ConfigError(f"Duplicate section [{name}] (line {number})", key=name)
            sections[name] = {}
            current = name
            continue
        if skipping:
            continue
        if "=" not in content:
            raise ConfigError(f"Line {number}: expected 'key = value', got '{content}'")
        if current is None:
            raise ConfigError(f"Line {number}: key outside any [section]")
        key, raw = (part.strip() for part in content.split("=", 1))
        if key in sections[current]:
            raise ConfigError(f"Duplicate key {current}.{key} (line {number})", key=f"{current}.{key}")
        sections[current][key] = parse_value(raw)
    return sections


# =============================================================================
# Schema
# =============================================================================


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


def _as_list(value: Any) -> Any:
    return value if isinstance(value, list) or value is None else [value]


class DomainSection(_Section):
    kind: Literal["rectangle", "disk"]
    sizes: Optional[List[float]] = None
    radius: Optional[float] = None

    listify_sizes = field_validator("sizes", mode="before")(_as_list)

    @model_validator(mode="after")
    def _shape(self) -> "DomainSection":
        if self.kind == "rectangle" and not self.sizes:
            raise ValueError("rectangle domains need sizes")
        if self.kind == "disk" and self.radius is None:
            raise ValueError("disk domains need radius")
        return self


class BetaSection(_Section):
    constant: Optional[float] = None
    grid: Optional[str] = None

    @model_validator(mode="after")
    def _one_source(self) -> "BetaSection":
        if self.constant is not None and self.grid is not None:
            raise ValueError("give either constant or grid, not both")
        if self.constant is None and self.grid is None:
            self.constant = 1.0
        return self


class NonlinearitySection(_Section):
    kind: Literal["power", "bump", "truncated", "tabulated", "polynomial"]
    coefficient: Optional[float] = None
    exponent: Optional[float] = None
    m: Optional[float] = None
    zeta: Optional[float] = None
    base: Optional[Literal["bump", "power", "polynomial"]] = None
    table: Optional[str] = None
    coefficients: Optional[List[float]] = None
    a1: Optional[float] = None
    a2: Optional[float] = None
    q: Optional[float] = None
    sign: Optional[bool] = None
    b: Optional[float] = None
    l: Optional[float] = None

    listify_coefficients = field_validator("coefficients", mode="before")(_as_list)

    @model_validator(mode="after")
    def _parameters(self) -> "NonlinearitySection":
        needed = {
            "power": ("coefficient", "exponent"),
            "bump": ("m", "zeta"),
            "truncated": ("base", "zeta"),
            "tabulated": ("table",),
            "polynomial": ("coefficients",),
        }[self.kind]
        missing = [name for name in needed if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.kind} nonlinearity needs {', '.join(missing)}")
        growth = [self.a1, self.a2, self.q]
        if any(v is not None for v in growth) and any(v is None for v in growth):
            raise ValueError("growth certificate needs all of a1, a2, q")
        if (self.b is None) != (self.l is None):
            raise ValueError("subquadratic certificate needs both b and l")
        return self


class VariationalSection(_Section):
    tau: AutoFloat = AUTO
    x0: Union[List[float], Literal["auto"]] = AUTO
    gamma: AutoFloat = AUTO
    rho: AutoFloat = AUTO
    lam: AutoFloat = Field(default=AUTO, alias="lambda")

    @field_validator("x0", mode="before")
    @classmethod
    def _x0(cls, value: Any) -> Any:
        return value if value == AUTO else _as_list(value)


class SolverSection(_Section):
    modes: int = 64
    quadrature_order: Optional[int] = None
    tol_res: Optional[float] = None
    seed: int = 0
    restarts: Optional[int] = None
    path_nodes: Optional[int] = None
    max_iterations: Optional[int] = None
    refine: bool = False


class EmbeddingSection(_Section):
    modes: Optional[int] = None
    restarts: Optional[int] = None
    ascent_steps: Optional[int] = None


class OutputSection(_Section):
    directory: Optional[str] = None
    grid_resolution: Optional[int] = None


class RunConfig(_Section):
    """One problem run; every section except [domain] and [nonlinearity] is optional."""

    domain: DomainSection
    beta: BetaSection = Field(default_factory=BetaSection)
    nonlinearity: NonlinearitySection
    variational: VariationalSection = Field(default_factory=VariationalSection)
    solver: SolverSection = Field(default_factory=SolverSection)
    embedding: EmbeddingSection = Field(default_factory=EmbeddingSection)
    output: OutputSection = Field(default_factory=OutputSection)

    def echo_lines(self) -> List[str]:
        """`[config.<section>]` blocks that re-parse to this RunConfig."""
        lines: List[str] = []
        for section in type(self).model_fields:
            values = getattr(self, section).model_dump(by_alias=True, exclude_none=True)
            lines.append(f"[config.{section}]")
            for key, value in values.items():
                lines.append(f"{key} = {format_value(value)}")
        return lines


def _config_error(error: ValidationError) -> ConfigError:
    first = error.errors()[0]
    key = ".".join(str(part) for part in first["loc"] if not isinstance(part, int))
    if first["type"] == "missing":
        return ConfigError(f"Missing required key '{key}'", key=key)
    if first["type"] == "extra_forbidden":
        return ConfigError(f"Unknown key '{key}'", key=key)
    return ConfigError(f"Invalid value for '{key or 'config'}': {first['msg']}", key=key or None)


def parse_run_config(text: str, prefix: str = "") -> RunConfig:
    """
    Raises:
        ConfigError: grammar or schema violation (names the dotted key)
    """
    sections = parse_sections(text, prefix)
    try:
        return RunConfig.model_validate(sections)
    except ValidationError as e:
        raise _config_error(e) from None


# =============================================================================
# Run Config Manager
# =============================================================================


class RunConfigManager:
    """
    A parsed RunConfig plus the directory its relative paths refer to.

    Attributes:
        config: the validated RunConfig
        base_dir: directory of the configuration file
    """

    def __init__(self, config: RunConfig, base_dir: Union[str, Path] = "."):
        self.config = config
        self.base_dir = Path(base_dir)
        self._check_files()

    def _resolve(self, path: str) -> Path:
        candidate = Path(path)
        return candidate if candidate.is_absolute() else self.base_dir / candidate

    def _check_files(self) -> None:
        references = {
            "beta.grid": self.config.beta.grid,
            "nonlinearity.table": self.config.nonlinearity.table,
        }
        for key, path in references.items():
            if path is not None and not self._resolve(path).is_file():
                raise ConfigError(f"File referenced by '{key}' not found: {path}", key=key)

    # ---------------------------------------------------------------- builders

    def build_domain(self) -> DomainSpec:
        d = self.config.domain
        if d.kind == "disk":
            return DomainSpec.disk(d.radius)
        return DomainSpec.rectangle(*d.sizes)

    def build_beta(self) -> BetaField:
        """Constant beta, or a CSV grid `x1,...,xn,beta` with one coordinate column per dimension."""
        b = self.config.beta
        if b.constant is not None:
            return BetaField.uniform(b.constant)
        n = self.build_domain().dimension
        data = np.loadtxt(self._resolve(b.grid), delimiter=",", skiprows=1, ndmin=2)
        if data.shape[1] != n + 1:
            raise ConfigError(
                f"beta.grid has {data.shape[1]} columns; a {n}-D domain needs "
                f"{n} coordinate columns and one beta column",
                key="beta.grid",
            )
        axes = tuple(np.unique(data[:, k]) for k in range(n))
        if int(np.prod([a.size for a in axes])) != data.shape[0]:
            raise ConfigError("beta.grid must list every point of a regular grid", key="beta.grid")
        # first coordinate varies slowest after sorting
        order = np.lexsort(tuple(data[:, k] for k in reversed(range(n))))
        values = data[order, n].reshape(tuple(a.size for a in axes))
        return BetaField(axes=axes, values=values)

    def build_nonlinearity(self) -> Nonlinearity:
        s = self.config.nonlinearity
        growth = GrowthCertificate(s.a1, s.a2, s.q) if s.q is not None else None
        sub = SubquadraticCertificate(s.b, s.l) if s.b is not None else None

        if s.kind == "power":
            return Nonlinearity.power(s.coefficient, s.exponent, growth=growth, subquadratic=sub)
        if s.kind == "bump":
            return Nonlinearity.bump(s.m, s.zeta, growth=growth, sign=s.sign, subquadratic=sub)
        if s.kind == "polynomial":
            return Nonlinearity.polynomial(
                s.coefficients, growth=growth, sign=bool(s.sign), subquadratic=sub
            )
        if s.kind == "tabulated":
            data = np.loadtxt(self._resolve(s.table), delimiter=",", skiprows=1, ndmin=2)
            return Nonlinearity.tabulated(
                data[:, 0], data[:, 1], growth=growth, sign=bool(s.sign), subquadratic=sub
            )

        # truncated: the base carries no certificates of its own
        if s.base == "bump":
            if s.m is None:
                raise ConfigError("truncated bump needs nonlinearity.m", key="nonlinearity.m")
            base = Nonlinearity.bump(s.m, s.zeta)
        elif s.base == "power":
            if s.coefficient is None or s.exponent is None:
                raise ConfigError(
                    "truncated power needs coefficient and exponent", key="nonlinearity.exponent"
                )
            base = Nonlinearity.power(s.coefficient, s.exponent)
        else:
            if s.coefficients is None:
                raise ConfigError(
                    "truncated polynomial needs coefficients", key="nonlinearity.coefficients"
                )
            base = Nonlinearity.polynomial(s.coefficients)
        return Nonlinearity.truncated(
            base, s.zeta, growth=growth, sign=True if s.sign is None else s.sign, subquadratic=sub
        )

    # ------------------------------------------------------------------ helpers

    @staticmethod
    def auto(value: Any) -> Optional[Any]:
        """None for `auto`, the value otherwise."""
        return None if value == AUTO else value

    def echo(self) -> str:
        return "\n".join(self.config.echo_lines()) + "\n"


def create_run_config_manager(path: Union[str, Path]) -> RunConfigManager:
    """
    Factory function for RunConfigManager.

    Raises:
        ConfigError: unreadable file or invalid content
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"Cannot read run configuration {path}: {e}") from None
    logger.debug(f"🏭 Creating RunConfigManager from {path}")
    return RunConfigManager(parse_run_config(text), base_dir=path.parent)


__all__ = [
    "AUTO",
    "RunConfig",
    "RunConfigManager",
    "create_run_config_manager",
    "format_value",
    "parse_run_config",
    "parse_sections",
    "parse_value",
]
