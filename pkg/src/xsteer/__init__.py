"""Entanglement, Bell nonlocality and entropic steering of two-qubit X-states
under one-sided decoherence."""

from .channels import ChannelKind, NoisySetting, apply_one_sided, apply_one_sided_dense, kraus_ops
from .measures import (
    MeasureReport,
    bell_max,
    bell_oracle,
    concurrence_oracle,
    concurrence_x,
    horodecki_mu,
    report,
    steering_lhs,
    steering_oracle,
)
from .qmath import DomainError
from .states import BlochX, XState, bloch_assemble, bloch_extract, mixed_family, pure_family, to_dense, validate

__all__ = [
    "BlochX",
    "ChannelKind",
    "DomainError",
    "MeasureReport",
    "NoisySetting",
    "XState",
    "apply_one_sided",
    "apply_one_sided_dense",
    "bell_max",
    "bell_oracle",
    "bloch_assemble",
    "bloch_extract",
    "concurrence_oracle",
    "concurrence_x",
    "horodecki_mu",
    "kraus_ops",
    "mixed_family",
    "pure_family",
    "report",
    "steering_lhs",
    "steering_oracle",
    "to_dense",
    "validate",
]
