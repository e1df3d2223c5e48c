"""Two-qubit X-states: the two initial families, Bloch parameters, validation.

An X-state in the basis |00>, |01>, |10>, |11> has nonzero entries only on
the diagonal (r11..r44) and the anti-diagonal (r14, r23). All entries are
real here.

Every field may also be a numpy array; arrays of a common shape describe a
batch of states and flow elementwise through the closed-form functions of
this package (used for grid sweeps).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields

import numpy as np

from .qmath import DomainError

TRACE_TOL = 1e-9
POS_TOL = 1e-12

_FIELDS = ("r11", "r22", "r33", "r44", "r14", "r23")


@dataclass(frozen=True)
class XState:
    r11: float
    r22: float
    r33: float
    r44: float
    r14: float
    r23: float

    def astuple(self):
        return tuple(getattr(self, f) for f in _FIELDS)

    def to_json(self) -> str:
        """JSON object with every entry written to 17 significant digits."""
        body = ", ".join(f'"{f}": {float(getattr(self, f)):.17g}' for f in _FIELDS)
        return "{" + body + "}"

    @classmethod
    def from_json(cls, text: str) -> "XState":
        data = json.loads(text)
        return cls(**{f: float(data[f]) for f in _FIELDS})

    def __getitem__(self, idx):
        # pick one state out of a batch
        return XState(*(np.asarray(v)[idx] for v in self.astuple()))


@dataclass(frozen=True)
class BlochX:
    """Correlations c1, c2, c3 and local z-polarizations r (qubit A), s (qubit B)."""

    c1: float
    c2: float
    c3: float
    r: float
    s: float

    def astuple(self):
        return tuple(getattr(self, f.name) for f in fields(self))


@dataclass(frozen=True)
class Validation:
    ok: bool
    trace: float
    min_block_det: float
    min_diag: float
    reasons: tuple = ()


def _in_range(x, lo, hi, name):
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)) or np.any(x < lo) or np.any(x > hi):
        raise DomainError(f"{name} must lie in [{lo}, {hi}]")


def pure_family(alpha) -> XState:
    """cos(alpha)|00> + sin(alpha)|11>, for 0 <= alpha <= pi/2."""
    _in_range(alpha, 0.0, np.pi / 2, "alpha")
    c, s = np.cos(alpha), np.sin(alpha)
    zero = np.zeros_like(c)
    return XState(c * c, zero, zero, s * s, c * s, zero)


def mixed_family(v) -> XState:
    """v|psi><psi| + (1-v)|phi><phi| with |psi>, |phi> the Bell states
    (|00>+|11>)/sqrt2 and (|01>+|10>)/sqrt2."""
    _in_range(v, 0.0, 1.0, "v")
    v = np.asarray(v, dtype=float)[()]
    a, b = v / 2, (1 - v) / 2
    return XState(a, b, b, a, a, b)


def family_state(family: str, param) -> XState:
    if family == "pure":
        return pure_family(param)
    if family == "mixed":
        return mixed_family(param)
    raise DomainError(f"unknown family {family!r}")


def bloch_extract(rho: XState) -> BlochX:
    r11, r22, r33, r44, r14, r23 = rho.astuple()
    return BlochX(
        c1=2 * (r23 + r14),
        c2=2 * (r23 - r14),
        c3=r11 - r22 - r33 + r44,
        r=r11 + r22 - r33 - r44,
        s=r11 - r22 + r33 - r44,
    )


def bloch_assemble(b: BlochX, check: bool = True) -> XState:
    c1, c2, c3, r, s = b.astuple()
    rho = XState(
        r11=(1 + c3 + r + s) / 4,
        r22=(1 - c3 + r - s) / 4,
        r33=(1 - c3 - r + s) / 4,
        r44=(1 + c3 - r - s) / 4,
        r14=(c1 - c2) / 4,
        r23=(c1 + c2) / 4,
    )
    if check:
        diag = validate(rho)
        if not diag.ok:
            raise DomainError("Bloch parameters do not give a valid state: " + "; ".join(diag.reasons))
    return rho


def to_dense(rho: XState) -> np.ndarray:
    r11, r22, r33, r44, r14, r23 = (float(x) for x in rho.astuple())
    return np.array(
        [
            [r11, 0, 0, r14],
            [0, r22, r23, 0],
            [0, r23, r33, 0],
            [r14, 0, 0, r44],
        ],
        dtype=complex,
    )


def validate(rho: XState) -> Validation:
    """Check unit trace, non-negative populations and positivity of both blocks.

    For a batch the worst entry across the batch is reported.
    """
    r11, r22, r33, r44, r14, r23 = (np.asarray(x, dtype=float) for x in rho.astuple())
    reasons = []
    if not all(np.all(np.isfinite(x)) for x in (r11, r22, r33, r44, r14, r23)):
        return Validation(False, float("nan"), float("nan"), float("nan"), ("non-finite entry",))
    tr = r11 + r22 + r33 + r44
    worst_tr = float(tr.flat[np.argmax(np.abs(tr - 1))])
    min_diag = float(np.min(np.stack([r11, r22, r33, r44])))
    det_outer = r11 * r44 - r14 * r14
    det_inner = r22 * r33 - r23 * r23
    min_det = float(np.min(np.stack([det_outer, det_inner])))
    if abs(worst_tr - 1) > TRACE_TOL:
        reasons.append(f"trace {worst_tr!r} != 1")
    if min_diag < -POS_TOL:
        reasons.append(f"negative population {min_diag!r}")
    if min_det < -POS_TOL:
        reasons.append(f"block not positive (det {min_det!r})")
    return Validation(not reasons, worst_tr, min_det, min_diag, tuple(reasons))


def require_valid(rho: XState) -> XState:
    diag = validate(rho)
    if not diag.ok:
        raise DomainError("invalid X-state: " + "; ".join(diag.reasons))
    return rho


def random_xstate(rng: np.random.Generator, size: int | None = None) -> XState:
    """Uniformly parameterized valid X-state (a batch of ``size`` if given).

    Populations come from a flat Dirichlet; each coherence is uniform within
    the range its 2x2 block allows.
    """
    pops = rng.dirichlet(np.ones(4), size=size)
    r11, r22, r33, r44 = np.moveaxis(pops, -1, 0)
    m14 = np.sqrt(r11 * r44)
    m23 = np.sqrt(r22 * r33)
    return XState(r11, r22, r33, r44, rng.uniform(-m14, m14), rng.uniform(-m23, m23))
