"""Locating where a measure crosses its classical bound along one parameter."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..qmath import DomainError

SCAN_POINTS = 1024
MIN_SCAN_POINTS = 64
MIN_TOL = 1e-12
# g = measure - threshold counts as "above" only beyond rounding noise
SIGN_EPS = 1e-12
TOUCH_EPS = 1e-9

_INVPHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class Crossing:
    param: float
    direction: str  # "rising", "falling" or "tangent"


@dataclass
class CrossingList:
    measure: str
    threshold: float
    crossings: list[Crossing] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "measure": self.measure,
            "threshold": self.threshold,
            "crossings": [{"param": c.param, "direction": c.direction} for c in self.crossings],
        }


def bisect(pred, a: float, b: float, tol: float) -> float:
    """Shrink [a, b] around the change of the boolean ``pred`` until b - a <= tol."""
    pa = pred(a)
    if pred(b) == pa:
        raise DomainError("bisect needs a bracketing interval")
    while b - a > tol:
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        if pred(m) == pa:
            a = m
        else:
            b = m
    return 0.5 * (a + b)


def golden_min(f, a: float, b: float, tol: float) -> float:
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def find_crossings(func, lo: float, hi: float, threshold: float, tol: float = 1e-10,
                   n: int = SCAN_POINTS, measure: str = "") -> CrossingList:
    """Scan ``func`` on ``n`` uniform points, bracket each sign change of
    ``func - threshold`` and refine it by bisection to an interval <= tol.

    Touch points, where the measure reaches the threshold without crossing it,
    are found by refining local extrema of the scan and are reported with
    direction "tangent".
    """
    if tol < MIN_TOL:
        raise DomainError(f"tol must be >= {MIN_TOL}")
    if n < MIN_SCAN_POINTS:
        raise DomainError(f"scan needs at least {MIN_SCAN_POINTS} points")
    if not lo < hi:
        raise DomainError("scan needs lo < hi")

    def g(x):
        return float(func(x)) - threshold

    def above(x):
        return g(x) > SIGN_EPS

    xs = np.linspace(lo, hi, n)
    gs = np.array([g(x) for x in xs])
    up = gs > SIGN_EPS
    found: list[Crossing] = []
    for i in range(n - 1):
        if up[i] != up[i + 1]:
            x = bisect(above, float(xs[i]), float(xs[i + 1]), tol)
            found.append(Crossing(x, "falling" if up[i] else "rising"))

    h = xs[1] - xs[0]
    for i in range(1, n - 1):
        window = gs[i - 1:i + 2]
        step = max(abs(gs[i + 1] - gs[i]), abs(gs[i] - gs[i - 1]))
        if np.all(window > SIGN_EPS) and gs[i] <= gs[i - 1] and gs[i] <= gs[i + 1]:
            sign = 1.0
        elif np.all(window < -SIGN_EPS) and gs[i] >= gs[i - 1] and gs[i] >= gs[i + 1]:
            sign = -1.0
        else:
            continue
        if abs(gs[i]) > step + TOUCH_EPS:
            continue
        a, b = float(xs[i - 1]), float(xs[i + 1])
        x = golden_min(lambda t: sign * g(t), a, b, tol)
        if abs(g(x)) > TOUCH_EPS + step / h * tol:
            continue
        if abs(g(x)) <= SIGN_EPS:
            # a flat touch is located only to ~sqrt(eps) by the minimizer;
            # centre it on the noise-level region instead, whose edges bisect cleanly
            def off(t):
                return abs(g(t)) > SIGN_EPS

            x = 0.5 * (bisect(off, a, x, tol) + bisect(off, x, b, tol))
        found.append(Crossing(x, "tangent"))

    found.sort(key=lambda c: c.param)
    return CrossingList(measure, threshold, _merge(found, tol))


def _merge(found: list[Crossing], tol: float) -> list[Crossing]:
    # a fall immediately undone by a rise (or the reverse) is a touch point
    window = 2 * tol + TOUCH_EPS
    out: list[Crossing] = []
    for c in found:
        if out and c.param - out[-1].param <= window:
            prev = out[-1]
            if {prev.direction, c.direction} == {"falling", "rising"}:
                out[-1] = Crossing(0.5 * (prev.param + c.param), "tangent")
                continue
            if c.direction == "tangent" or prev.direction == "tangent":
                out[-1] = prev if prev.direction == "tangent" else c
                continue
        out.append(c)
    return out


def scan_measure(family: str, channel, fixed: dict, axis, measure: str,
                 tol: float = 1e-10, impl: str = "closed") -> CrossingList:
    """Crossings of ``measure`` along ``axis`` with the other parameters held at ``fixed``.

    ``axis`` is a grid ``Axis``; its point count is the scan density.
    """
    from ..measures import THRESHOLDS
    from .grid import FAMILY_PARAM, evaluate

    if measure not in THRESHOLDS:
        raise DomainError(f"unknown measure {measure!r}")
    family_param = FAMILY_PARAM[family]

    def func(x):
        params = dict(fixed)
        params[axis.param] = x
        if family_param not in params:
            raise DomainError(f"missing value for {family_param}")
        if channel is not None and "strength" not in params:
            raise DomainError("missing value for strength")
        vals = evaluate(family, channel, params[family_param], params.get("strength"), [measure], impl)
        return float(vals[measure])

    return find_crossings(func, axis.lo, axis.hi, THRESHOLDS[measure], tol, axis.count, measure)
