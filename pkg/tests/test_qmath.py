import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from xsteer.qmath import I2, SX, DomainError, adjoint, multiply, shannon, tensor2x2, trace, xlogx


@pytest.mark.parametrize("x, expected", [(0, 0.0), (1, 0.0), (0.5, -0.5), (2.0, 2.0), (-5e-13, 0.0)])
def test_xlogx(x, expected):
    assert xlogx(x) == pytest.approx(expected, abs=1e-15)


def test_xlogx_array_matches_scalar():
    xs = np.array([0.0, 1e-300, 0.25, 1.0, 3.0])
    np.testing.assert_allclose(xlogx(xs), [xlogx(float(x)) for x in xs], rtol=0, atol=1e-15)


def test_xlogx_rejects_negative():
    with pytest.raises(DomainError):
        xlogx(-1e-6)
    with pytest.raises(DomainError):
        xlogx(np.array([0.1, -1e-3]))


@pytest.mark.parametrize(
    "weights, expected",
    [([0.5, 0.5], 1.0), ([1.0, 0.0], 0.0), ([0.25] * 4, 2.0)],
)
def test_shannon_examples(weights, expected):
    assert shannon(weights) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("weights", [[0.5, 0.6], [1.2, -0.2], [], [np.nan, 1.0]])
def test_shannon_rejects_invalid(weights):
    with pytest.raises(DomainError):
        shannon(weights)


def test_binary_entropy_peaks_at_half():
    ps = np.linspace(0, 1, 1001)
    h = np.array([shannon([p, 1 - p]) for p in ps])
    assert ps[np.argmax(h)] == 0.5
    assert abs(h.max() - 1) <= 1e-12
    assert np.all(h <= 1 + 1e-12)


@given(st.lists(st.floats(0.01, 1.0), min_size=2, max_size=6), st.randoms(use_true_random=False))
def test_shannon_permutation_invariant(raw, rnd):
    w = np.array(raw) / sum(raw)
    perm = list(w)
    rnd.shuffle(perm)
    assert shannon(w) == pytest.approx(shannon(perm), abs=1e-12)


def test_tensor_and_trace():
    np.testing.assert_array_equal(tensor2x2(I2, I2), np.eye(4))
    assert trace(np.eye(4)) == 4
    # I (x) sx sends |00> (index 0) to |01> (index 1)
    e00 = np.zeros(4)
    e00[0] = 1
    np.testing.assert_array_equal(tensor2x2(I2, SX) @ e00, [0, 1, 0, 0])


def test_matrix_identities(rng):
    for _ in range(50):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        b = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        np.testing.assert_array_equal(adjoint(adjoint(a)), a)
        assert abs(trace(multiply(a, b)) - trace(multiply(b, a))) <= 1e-12


def test_shape_errors():
    with pytest.raises(DomainError):
        tensor2x2(np.eye(3), I2)
    with pytest.raises(DomainError):
        multiply(np.eye(2), np.eye(4))
    with pytest.raises(DomainError):
        trace(np.ones((2, 3)))
    with pytest.raises(DomainError):
        tensor2x2(np.array([[math.inf, 0], [0, 1]]), I2)
