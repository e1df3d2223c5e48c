"""Published analytic expressions for the two initial families.

These are reference values only. The Kraus pipeline (``channels`` followed by
``measures``) is what the rest of the package computes with; the functions
here exist so that the pipeline can be checked against the printed tables
and formulas, and vice versa.
"""

from __future__ import annotations

import numpy as np

from .channels import ChannelKind, NoisySetting, apply_one_sided
from .measures import concurrence_x
from .qmath import DomainError
from .states import BlochX, mixed_family


class NoClosedForm(DomainError):
    """No published expression exists for this family/channel combination."""


def _strength(setting: NoisySetting | None):
    if setting is None:
        return None, 0.0
    return setting.kind, setting.strength


def _bell_from_bloch(b: BlochX):
    mu1, mu2, mu3 = b.c1**2, b.c2**2, b.c3**2
    return 2 * np.maximum(np.sqrt(mu1 + mu2), np.sqrt(mu1 + mu3))


def table2_bloch(alpha, setting: NoisySetting | None) -> BlochX:
    """Bloch parameters of the evolved pure family (``None``: no channel)."""
    kind, x = _strength(setting)
    s2, c2a = np.sin(2 * alpha), np.cos(2 * alpha)
    if kind is None:
        return BlochX(s2, -s2, 1.0 + 0 * s2, c2a, c2a)
    if kind is ChannelKind.AD:
        k = np.sqrt(1 - x)
        return BlochX(k * s2, -k * s2, 1 - x + x * c2a, c2a, x - (x - 1) * c2a)
    if kind is ChannelKind.PD:
        k = np.sqrt(1 - x)
        return BlochX(k * s2, -k * s2, 1.0 + 0 * s2, c2a, c2a)
    if kind is ChannelKind.PF:
        return BlochX((2 * x - 1) * s2, (1 - 2 * x) * s2, 1.0 + 0 * s2, c2a, c2a)
    return BlochX(s2, (1 - 2 * x) * s2, 2 * x - 1 + 0 * s2, c2a, (2 * x - 1) * c2a)


def table2_mu(alpha, setting: NoisySetting | None):
    """The mu rows: squares of the correlation coefficients."""
    b = table2_bloch(alpha, setting)
    return b.c1**2, b.c2**2, b.c3**2


def table3_bloch(v, setting: NoisySetting | None) -> BlochX:
    """Bloch parameters of the evolved mixed family. PF has no published column."""
    kind, x = _strength(setting)
    u = 2 * np.asarray(v, dtype=float) - 1
    zero = 0 * u
    if kind is None:
        return BlochX(1.0 + zero, -u, u, zero, zero)
    if kind is ChannelKind.AD:
        k = np.sqrt(1 - x)
        return BlochX(k + zero, -u * k, u * (1 - x), zero, x + zero)
    if kind is ChannelKind.PD:
        k = np.sqrt(1 - x)
        return BlochX(k + zero, -u * k, u, zero, zero)
    if kind is ChannelKind.BF:
        return BlochX(1.0 + zero, u * (1 - 2 * x), u * (2 * x - 1), zero, zero)
    raise NoClosedForm("no published Bloch parameters for the mixed family under PF")


def pure_measures_closed(alpha, setting: NoisySetting | None):
    """(C, B) for the evolved pure family."""
    kind, x = _strength(setting)
    s2 = np.sin(2 * alpha)
    if kind is None:
        c = s2
    elif kind in (ChannelKind.AD, ChannelKind.PD):
        c = np.sqrt(1 - x) * s2
    else:
        c = np.abs(2 * x - 1) * s2
    return c, _bell_from_bloch(table2_bloch(alpha, setting))


def mixed_concurrence_ad(v, d):
    k = np.sqrt(1 - d)
    return np.maximum(
        0.0,
        np.maximum(
            k * (1 - v) - np.sqrt(v * (1 - d) * (v + d * (1 - v))),
            v * k - np.sqrt((1 - d) * (1 - v) * ((1 - v) + v * d)),
        ),
    )


def mixed_concurrence_pd(v, d):
    k = np.sqrt(1 - d)
    return np.maximum(0.0, np.maximum(k * (1 - v) - v, v * k - (1 - v)))


def _theta(v, p):
    return p**2 + 2 * (3 - 4 * p) * p * v + (1 + 8 * (p - 1) * p) * v**2 + (p - v) ** 2


def mixed_concurrence_bf_printed(v, p, reading: str):
    """The printed bit-flip concurrence under one of two groupings of its
    first branch, which reads ``2(1-v+p(2v-1)) - 2 sqrt(Theta)/2 sqrt(2)``.

    ``reading="whole"`` divides the whole difference by 2 sqrt(2);
    ``reading="root"`` divides only the square-root term. Neither grouping is
    trusted: callers compare against the pipeline value.
    """
    head = 2 * (1 - v + p * (2 * v - 1))
    root = 2 * np.sqrt(_theta(v, p))
    if reading == "whole":
        first = (head - root) / (2 * np.sqrt(2))
    elif reading == "root":
        first = head - root / (2 * np.sqrt(2))
    else:
        raise ValueError(f"unknown reading {reading!r}")
    second = (p + v - 2 * p * v) - np.sqrt((p * v + (p - 1) * (v - 1)) * ((p - 1) * (v - 1) + p * v))
    return np.maximum(0.0, np.maximum(first, second))


def bf_reading_report(v, p) -> dict:
    """Pipeline concurrence next to both readings of the printed BF formula."""
    pipeline = concurrence_x(apply_one_sided(mixed_family(v), NoisySetting(ChannelKind.BF, p)))
    out = {"pipeline": pipeline}
    for reading in ("whole", "root"):
        value = mixed_concurrence_bf_printed(v, p, reading)
        out[reading] = value
        out[reading + "_matches"] = bool(np.all(np.abs(value - pipeline) <= 1e-10))
    return out


def mixed_bell(v, setting: NoisySetting | None):
    kind, x = _strength(setting)
    u2 = (1 - 2 * np.asarray(v, dtype=float)) ** 2
    if kind is None or kind is ChannelKind.AD:
        return 2 * np.sqrt((1 - x) * (1 + u2))
    if kind is ChannelKind.PD:
        return 2 * np.sqrt(1 - x + u2)
    if kind is ChannelKind.BF:
        return 2 * np.sqrt(1 + u2 * (1 - 2 * x) ** 2)
    raise NoClosedForm("no published Bell expression for the mixed family under PF")


def mixed_measures_closed(v, setting: NoisySetting | None):
    """(C, B) for the evolved mixed family.

    For BF the concurrence comes from the pipeline, since the printed
    expression is ambiguous (see ``bf_reading_report``).
    """
    kind, x = _strength(setting)
    if kind is ChannelKind.PF:
        raise NoClosedForm("no published expressions for the mixed family under PF")
    if kind is None or kind is ChannelKind.AD:
        c = mixed_concurrence_ad(v, x)
    elif kind is ChannelKind.PD:
        c = mixed_concurrence_pd(v, x)
    else:
        c = concurrence_x(apply_one_sided(mixed_family(v), setting))
    return c, mixed_bell(v, setting)
