"""Numeric kernels: entropy terms and small complex matrix helpers.

Logarithms are base 2 throughout, so entropies are in bits.
"""

from __future__ import annotations

import math

import numpy as np

EPS_POS = 1e-12
SUM_TOL = 1e-9

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = {"x": SX, "y": SY, "z": SZ}


class DomainError(ValueError):
    """An input lies outside the domain an operation is defined on."""


def xlogx(x):
    """Return ``x * log2(x)`` with ``xlogx(0) == 0``.

    Works elementwise on arrays. Values in ``[-EPS_POS, 0)`` are treated as
    rounding noise and clamped to zero.
    """
    if isinstance(x, (float, int)):
        if x < -EPS_POS:
            raise DomainError(f"xlogx needs x >= 0, got {x!r}")
        return x * math.log2(x) if x > 0 else 0.0
    x = np.asarray(x, dtype=float)
    if np.any(x < -EPS_POS):
        raise DomainError(f"xlogx needs x >= 0, got {x.min()!r}")
    x = np.clip(x, 0.0, None)
    safe = np.where(x > 0, x, 1.0)
    out = np.where(x > 0, x * np.log2(safe), 0.0)
    return out[()] if out.ndim == 0 else out


def prob_dist(weights) -> np.ndarray:
    """Validate a probability vector and return it clamped to ``>= 0``."""
    w = np.asarray(weights, dtype=float).ravel()
    if w.size == 0 or not np.all(np.isfinite(w)):
        raise DomainError("probabilities must be a non-empty finite vector")
    if np.any(w < -EPS_POS):
        raise DomainError(f"negative probability {w.min()!r}")
    if abs(w.sum() - 1.0) > SUM_TOL:
        raise DomainError(f"probabilities sum to {w.sum()!r}, not 1")
    return np.clip(w, 0.0, None)


def shannon(weights) -> float:
    """Shannon entropy in bits of a probability vector."""
    w = prob_dist(weights)
    return -math.fsum(xlogx(x) for x in w.tolist())


def _check(m, shape):
    m = np.asarray(m, dtype=complex)
    if m.shape != shape:
        raise DomainError(f"expected shape {shape}, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix has non-finite entries")
    return m


def multiply(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DomainError(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def adjoint(m) -> np.ndarray:
    return np.asarray(m, dtype=complex).conj().T


def trace(m) -> complex:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"trace needs a square matrix, got {m.shape}")
    return complex(np.trace(m))


def tensor2x2(a, b) -> np.ndarray:
    """Kronecker product ``a (x) b`` of two 2x2 matrices.

    Qubit A is the left factor; the basis order is |00>, |01>, |10>, |11>.
    """
    return np.kron(_check(a, (2, 2)), _check(b, (2, 2)))
