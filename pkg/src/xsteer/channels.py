"""Single-qubit decoherence channels acting on qubit B of an X-state.

Strength conventions follow the usual Kraus tables: for amplitude damping
(AD) and phase damping (PD) ``d = 0`` is noiseless; for phase flip (PF) and
bit flip (BF) ``p = 1`` is noiseless and ``p = 0`` is a certain flip.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .qmath import I2, SX, SZ, DomainError, adjoint, tensor2x2
from .states import XState, family_state, require_valid, to_dense


class ChannelKind(str, enum.Enum):
    AD = "ad"
    PD = "pd"
    PF = "pf"
    BF = "bf"

    @classmethod
    def parse(cls, name) -> "ChannelKind":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise DomainError(f"unknown channel {name!r}") from None


@dataclass(frozen=True)
class NoisySetting:
    kind: ChannelKind
    strength: float

    def __post_init__(self):
        object.__setattr__(self, "kind", ChannelKind.parse(self.kind))
        x = np.asarray(self.strength, dtype=float)
        if not np.all(np.isfinite(x)) or np.any(x < 0) or np.any(x > 1):
            raise DomainError(f"strength must lie in [0, 1], got {self.strength!r}")

    @property
    def is_identity(self) -> bool:
        if self.kind in (ChannelKind.AD, ChannelKind.PD):
            return bool(np.all(np.asarray(self.strength) == 0))
        return bool(np.all(np.asarray(self.strength) == 1))


def noiseless(kind) -> NoisySetting:
    kind = ChannelKind.parse(kind)
    return NoisySetting(kind, 0.0 if kind in (ChannelKind.AD, ChannelKind.PD) else 1.0)


def kraus_ops(setting: NoisySetting) -> tuple[np.ndarray, np.ndarray]:
    x = float(setting.strength)
    kind = setting.kind
    if kind is ChannelKind.PF:
        return np.sqrt(x) * I2, np.sqrt(1 - x) * SZ
    if kind is ChannelKind.BF:
        return np.sqrt(x) * I2, np.sqrt(1 - x) * SX
    e0 = np.array([[1, 0], [0, np.sqrt(1 - x)]], dtype=complex)
    if kind is ChannelKind.AD:
        e1 = np.array([[0, np.sqrt(x)], [0, 0]], dtype=complex)
    else:
        e1 = np.array([[0, 0], [0, np.sqrt(x)]], dtype=complex)
    return e0, e1


def kraus_completeness(setting: NoisySetting) -> float:
    """Max-norm deviation of sum_i E_i^dag E_i from the identity."""
    total = sum(adjoint(e) @ e for e in kraus_ops(setting))
    return float(np.max(np.abs(total - I2)))


def apply_one_sided(rho: XState, setting: NoisySetting | None) -> XState:
    """Closed-form action of ``setting`` on qubit B. ``None`` means no channel."""
    require_valid(rho)
    if setting is None:
        return rho
    x = setting.strength
    r11, r22, r33, r44, r14, r23 = rho.astuple()
    kind = setting.kind
    if kind is ChannelKind.AD:
        k = np.sqrt(1 - x)
        return XState(r11 + x * r22, (1 - x) * r22, r33 + x * r44, (1 - x) * r44, k * r14, k * r23)
    if kind is ChannelKind.PD:
        k = np.sqrt(1 - x)
        return XState(r11, r22, r33, r44, k * r14, k * r23)
    if kind is ChannelKind.PF:
        k = 2 * x - 1
        return XState(r11, r22, r33, r44, k * r14, k * r23)
    q = 1 - x
    return XState(
        x * r11 + q * r22,
        x * r22 + q * r11,
        x * r33 + q * r44,
        x * r44 + q * r33,
        x * r14 + q * r23,
        x * r23 + q * r14,
    )


def apply_one_sided_dense(rho: XState, setting: NoisySetting) -> np.ndarray:
    """Literal sum_i (I (x) E_i) rho (I (x) E_i)^dag on the dense matrix."""
    require_valid(rho)
    dense = to_dense(rho)
    out = np.zeros((4, 4), dtype=complex)
    for e in kraus_ops(setting):
        k = tensor2x2(I2, e)
        out += k @ dense @ adjoint(k)
    return out


def evolve(family: str, param, setting: NoisySetting | None) -> XState:
    return apply_one_sided(family_state(family, param), setting)
