"""Parameter grids and vectorized measure evaluation for sweeps."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from ..channels import ChannelKind, NoisySetting, apply_one_sided
from ..measures import MEASURES, ORACLES
from ..qmath import DomainError
from ..states import family_state

# aliases accepted on the command line -> canonical parameter
AXIS_ALIASES = {"alpha": "alpha", "v": "v", "strength": "strength", "d": "strength", "p": "strength"}
DOMAINS = {"alpha": (0.0, np.pi / 2), "v": (0.0, 1.0), "strength": (0.0, 1.0)}
FAMILY_PARAM = {"pure": "alpha", "mixed": "v"}

_PI_RE = re.compile(r"^\s*([0-9.eE+-]*)\s*\*?\s*pi\s*(?:/\s*([0-9.eE+-]+))?\s*$")


def parse_real(text: str) -> float:
    """Parse a float, also accepting multiples of pi such as ``pi/4`` or ``3pi/8``."""
    try:
        return float(text)
    except ValueError:
        pass
    m = _PI_RE.match(str(text))
    if not m:
        raise DomainError(f"not a number: {text!r}")
    num = float(m.group(1)) if m.group(1) not in ("", "+", "-") else (-1.0 if m.group(1) == "-" else 1.0)
    den = float(m.group(2)) if m.group(2) else 1.0
    return num * np.pi / den


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    count: int

    @property
    def param(self) -> str:
        return AXIS_ALIASES[self.name]

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.count)

    @classmethod
    def parse(cls, spec: str, default_count: int | None = None) -> "Axis":
        parts = spec.split(":")
        if len(parts) == 3 and default_count is not None:
            parts.append(str(default_count))
        if len(parts) != 4:
            raise DomainError(f"axis spec must be name:lo:hi:n, got {spec!r}")
        name, lo, hi, n = parts
        if name not in AXIS_ALIASES:
            raise DomainError(f"unknown axis {name!r}; use one of {sorted(AXIS_ALIASES)}")
        try:
            count = int(n)
        except ValueError:
            raise DomainError(f"axis point count must be an integer, got {n!r}") from None
        axis = cls(name, parse_real(lo), parse_real(hi), count)
        axis.check()
        return axis

    def check(self):
        if self.count < 2:
            raise DomainError("axis needs at least 2 points")
        if not self.lo < self.hi:
            raise DomainError(f"axis {self.name}: need lo < hi")
        dlo, dhi = DOMAINS[self.param]
        if self.lo < dlo or self.hi > dhi:
            raise DomainError(f"axis {self.name} must stay within [{dlo}, {dhi}]")


@dataclass(frozen=True)
class GridSpec:
    family: str
    channel: ChannelKind | None
    axes: tuple[Axis, ...]
    fixed: dict

    def __post_init__(self):
        if self.family not in FAMILY_PARAM:
            raise DomainError(f"unknown family {self.family!r}")
        if not 1 <= len(self.axes) <= 2:
            raise DomainError("a grid has one or two axes")
        params = [a.param for a in self.axes]
        if len(set(params)) != len(params):
            raise DomainError("grid axes must be distinct parameters")
        for p in params:
            if p in ("alpha", "v") and p != FAMILY_PARAM[self.family]:
                raise DomainError(f"axis {p} does not belong to the {self.family} family")
            if p == "strength" and self.channel is None:
                raise DomainError("a strength axis needs a channel")
        for p in self.required_params():
            if p not in params and p not in self.fixed:
                raise DomainError(f"missing value for {p}")

    def required_params(self):
        req = [FAMILY_PARAM[self.family]]
        if self.channel is not None:
            req.append("strength")
        return req

    def mesh(self) -> list[np.ndarray]:
        """Axis values broadcast to the full grid, axis1-major."""
        vals = [a.values() for a in self.axes]
        return list(np.meshgrid(*vals, indexing="ij"))

    def param_arrays(self) -> dict:
        grids = self.mesh()
        shape = grids[0].shape
        out = {a.param: g for a, g in zip(self.axes, grids)}
        for p in self.required_params():
            if p not in out:
                out[p] = np.full(shape, float(self.fixed[p]))
        return out


def evolved_state(family: str, channel: ChannelKind | None, param, strength=None):
    setting = None if channel is None else NoisySetting(channel, strength)
    return apply_one_sided(family_state(family, param), setting)


def evaluate(family: str, channel: ChannelKind | None, param, strength, measures, impl: str = "closed"):
    """Measures on (possibly array-valued) parameters. Returns name -> array."""
    param = np.asarray(param, dtype=float)
    strength = None if channel is None else np.asarray(strength, dtype=float)
    if impl == "closed":
        rho = evolved_state(family, channel, param, strength)
        return {m: np.broadcast_to(np.asarray(MEASURES[m](rho), dtype=float), param.shape) for m in measures}
    if impl != "oracle":
        raise DomainError(f"unknown implementation {impl!r}")
    out = {m: np.empty(param.shape) for m in measures}
    for idx in np.ndindex(param.shape):
        rho = evolved_state(family, channel, float(param[idx]), None if strength is None else float(strength[idx]))
        for m in measures:
            out[m][idx] = ORACLES[m](rho)
    return out


def evaluate_grid(spec: GridSpec, measures, impl: str = "closed") -> dict:
    arrays = spec.param_arrays()
    return evaluate(
        spec.family,
        spec.channel,
        arrays[FAMILY_PARAM[spec.family]],
        arrays.get("strength"),
        measures,
        impl,
    )


def fmt(x) -> str:
    return f"{float(x):.12g}"


def grid_rows(spec: GridSpec, measures, impl: str = "closed"):
    """Header and rows, one per grid point in axis1-major order."""
    values = evaluate_grid(spec, measures, impl)
    grids = spec.mesh()
    header = [a.name for a in spec.axes] + list(measures)
    cols = [g.ravel() for g in grids] + [values[m].ravel() for m in measures]
    return header, np.column_stack(cols)


def to_csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(fmt(x) for x in row) for row in np.asarray(rows).tolist())
    return "\n".join(lines) + "\n"
