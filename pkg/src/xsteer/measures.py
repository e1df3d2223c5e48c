"""Concurrence, Bell-CHSH maximum and the entropic steering quantity.

Each measure has a closed form for X-states (vectorized, used for sweeps)
and an oracle that starts from the dense 4x4 density matrix.

Steering is reported as ``S``, the left-hand side of the X-state form of the
entropic steering inequality. The three conditional entropies of the Pauli
X/Y/Z measurements sum to ``3 - S/2``, so ``S > 2`` is a violation of the
bound 2 and certifies steering from A to B.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .qmath import I2, PAULI, SY, DomainError, shannon, tensor2x2, xlogx
from .states import XState, bloch_extract, to_dense

TOL_FLAG = 1e-9
EIG_TOL = 1e-10
PROB_TOL = 1e-12

_SYSY = np.kron(SY, SY)
# sigma_i (x) sigma_j for i, j in x, y, z
_PAULI_PAIRS = np.array([[tensor2x2(PAULI[i], PAULI[j]) for j in "xyz"] for i in "xyz"])
# (Pi_a (x) Pi_b) for each basis, outcomes ordered +1, -1
_PROJ_PAIRS = {
    w: np.array([[tensor2x2(pa, pb) for pb in ((I2 + sb * PAULI[w]) / 2 for sb in (1, -1))]
                 for pa in ((I2 + sa * PAULI[w]) / 2 for sa in (1, -1))])
    for w in "xyz"
}


def _scalar(x):
    x = np.asarray(x, dtype=float)
    return float(x) if x.ndim == 0 else x


def concurrence_x(rho: XState):
    r11, r22, r33, r44, r14, r23 = rho.astuple()
    # clip guards tiny negative products from rounding
    t1 = np.abs(r14) - np.sqrt(np.clip(r22 * r33, 0, None))
    t2 = np.abs(r23) - np.sqrt(np.clip(r11 * r44, 0, None))
    return _scalar(2 * np.maximum(0.0, np.maximum(t1, t2)))


def _block_eigs(blk: np.ndarray, det: float) -> tuple[float, float]:
    # Roots of the characteristic polynomial of a 2x2 block. The small root
    # comes from Vieta (det / large root) to avoid cancellation.
    p, q, r, s = blk[0, 0], blk[0, 1], blk[1, 0], blk[1, 1]
    tr = float(np.real(p + s))
    disc = float(np.real((p - s) ** 2 + 4 * q * r))
    if disc < -EIG_TOL:
        raise DomainError("R has complex eigenvalues; state is not positive")
    disc = max(disc, 0.0)
    big = (tr + np.sqrt(disc)) / 2
    if big < -EIG_TOL:
        raise DomainError(f"R has negative eigenvalue {big!r}; state is not positive")
    small = det / big if big > 0 else 0.0
    return big, small


def concurrence_oracle(rho: XState) -> float:
    """Wootters concurrence from the spectrum of R = rho Y rho* Y, Y = sy (x) sy.

    Y maps each X-block ({|00>,|11>} and {|01>,|10>}) to itself, so R splits
    into two 2x2 blocks whose eigenvalues are quadratic roots.
    """
    dense = to_dense(rho)
    big_r = dense @ _SYSY @ dense.conj() @ _SYSY
    lams = []
    for idx in ((0, 3), (1, 2)):
        sub = np.ix_(idx, idx)
        # det R_block = det(rho_b) det(Y_b) det(rho*_b) det(Y_b)
        det = float(np.real(np.linalg.det(dense[sub]) * np.linalg.det(_SYSY[sub])) ** 2)
        lams.extend(_block_eigs(big_r[sub], det))
    lams = np.sort(np.array(lams))[::-1]
    if lams[-1] < -EIG_TOL:
        raise DomainError(f"R has negative eigenvalue {lams[-1]!r}; state is not positive")
    roots = np.sqrt(np.clip(lams, 0, None))
    return float(max(0.0, roots[0] - roots[1] - roots[2] - roots[3]))


def horodecki_mu(rho: XState):
    """Eigenvalues of T^T T, ordered so that mu1 >= mu2."""
    r11, r22, r33, r44, r14, r23 = rho.astuple()
    a, b = np.abs(r14), np.abs(r23)
    return (
        _scalar(4 * (a + b) ** 2),
        _scalar(4 * (a - b) ** 2),
        _scalar((r11 - r22 - r33 + r44) ** 2),
    )


def bell_max(rho: XState):
    mu1, mu2, mu3 = horodecki_mu(rho)
    return _scalar(2 * np.maximum(np.sqrt(mu1 + mu2), np.sqrt(mu1 + mu3)))


def correlation_matrix(rho: XState) -> np.ndarray:
    """T_ij = Tr[rho (sigma_i (x) sigma_j)] for i, j in x, y, z."""
    dense = to_dense(rho)
    return np.real(np.einsum("ijab,ba->ij", _PAULI_PAIRS, dense))


def bell_oracle(rho: XState) -> float:
    """Horodecki criterion: 2 * sqrt(sum of the two largest eigenvalues of T^T T)."""
    t = correlation_matrix(rho)
    mu = np.sort(np.linalg.eigvalsh(t.T @ t))[::-1]
    return float(2 * np.sqrt(max(0.0, mu[0] + mu[1])))


def _f(t):
    return xlogx(1 + t) + xlogx(1 - t)


def steering_lhs(rho: XState):
    b = bloch_extract(rho)
    c1, c2, c3, r, s = b.astuple()
    quad = (
        xlogx(1 + c3 + r + s)
        + xlogx(1 + c3 - r - s)
        + xlogx(1 - c3 - r + s)
        + xlogx(1 - c3 + r - s)
    )
    return _scalar(_f(c1) + _f(c2) - _f(r) + quad / 2)


def joint_distribution(rho, basis: str) -> np.ndarray:
    """P(a, b) for measuring the same Pauli ``basis`` on both qubits.

    ``rho`` is an XState or its dense matrix. Rows index Alice's outcome,
    columns Bob's (+1 first).
    """
    dense = to_dense(rho) if isinstance(rho, XState) else rho
    joint = np.real(np.einsum("ijab,ba->ij", _PROJ_PAIRS[basis], dense))
    if np.any(joint < -PROB_TOL) or np.any(joint > 1 + PROB_TOL):
        raise DomainError(f"joint probabilities out of range: {joint.ravel()!r}")
    return joint


def conditional_entropies(rho: XState) -> dict[str, float]:
    """H(W_B | W_A) in bits for W in x, y, z, from measurement statistics."""
    dense = to_dense(rho)
    out = {}
    for basis in "xyz":
        joint = joint_distribution(dense, basis)
        out[basis] = shannon(joint.ravel()) - shannon(joint.sum(axis=1))
    return out


def steering_oracle(rho: XState) -> float:
    return 2 * (3 - sum(conditional_entropies(rho).values()))


@dataclass(frozen=True)
class MeasureReport:
    concurrence: float
    bell_max: float
    steering_lhs: float
    entangled: bool
    nonlocal_: bool
    steerable: bool
    tol_flag: float = TOL_FLAG

    def as_dict(self) -> dict:
        return {
            "C": self.concurrence,
            "B": self.bell_max,
            "S": self.steering_lhs,
            "entangled": self.entangled,
            "nonlocal": self.nonlocal_,
            "steerable": self.steerable,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def report(rho: XState, tol_flag: float = TOL_FLAG) -> MeasureReport:
    c = float(concurrence_x(rho))
    b = float(bell_max(rho))
    s = float(steering_lhs(rho))
    if not all(np.isfinite([c, b, s])):
        raise DomainError("measure evaluated to a non-finite value")
    return MeasureReport(c, b, s, c > tol_flag, b > 2 + tol_flag, s > 2 + tol_flag, tol_flag)


MEASURES = {"C": concurrence_x, "B": bell_max, "S": steering_lhs}
ORACLES = {"C": concurrence_oracle, "B": bell_oracle, "S": steering_oracle}
THRESHOLDS = {"C": 0.0, "B": 2.0, "S": 2.0}
