import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from xsteer.qmath import DomainError
from xsteer.states import (
    BlochX,
    XState,
    bloch_assemble,
    bloch_extract,
    mixed_family,
    pure_family,
    random_xstate,
    to_dense,
    validate,
)


def fields(rho):
    return np.array([float(x) for x in rho.astuple()])


@st.composite
def xstates(draw):
    raw = [draw(st.floats(1e-6, 1.0)) for _ in range(4)]
    r11, r22, r33, r44 = np.array(raw) / sum(raw)
    f14 = draw(st.floats(-1.0, 1.0))
    f23 = draw(st.floats(-1.0, 1.0))
    return XState(r11, r22, r33, r44, f14 * math.sqrt(r11 * r44), f23 * math.sqrt(r22 * r33))


@pytest.mark.parametrize(
    "alpha, expected",
    [
        (math.pi / 4, [0.5, 0, 0, 0.5, 0.5, 0]),
        (0.0, [1, 0, 0, 0, 0, 0]),
        (math.pi / 6, [0.75, 0, 0, 0.25, math.sqrt(3) / 4, 0]),
    ],
)
def test_pure_family(alpha, expected):
    np.testing.assert_allclose(fields(pure_family(alpha)), expected, atol=1e-15)


@pytest.mark.parametrize(
    "v, expected",
    [
        (1.0, [0.5, 0, 0, 0.5, 0.5, 0]),
        (0.0, [0, 0.5, 0.5, 0, 0, 0.5]),
        (0.5, [0.25] * 6),
    ],
)
def test_mixed_family(v, expected):
    np.testing.assert_allclose(fields(mixed_family(v)), expected, atol=1e-15)


@pytest.mark.parametrize("bad", [-0.1, math.pi / 2 + 1e-9, math.nan])
def test_pure_family_domain(bad):
    with pytest.raises(DomainError):
        pure_family(bad)


@pytest.mark.parametrize("bad", [-1e-9, 1.5])
def test_mixed_family_domain(bad):
    with pytest.raises(DomainError):
        mixed_family(bad)


def test_bloch_extract_pure_family():
    for alpha in np.linspace(0, math.pi / 2, 17):
        b = bloch_extract(pure_family(alpha))
        s2, c2 = math.sin(2 * alpha), math.cos(2 * alpha)
        np.testing.assert_allclose(b.astuple(), [s2, -s2, 1, c2, c2], atol=1e-15)


def test_bloch_extract_mixed_family():
    for v in np.linspace(0, 1, 11):
        b = bloch_extract(mixed_family(v))
        np.testing.assert_allclose(b.astuple(), [1, 1 - 2 * v, 2 * v - 1, 0, 0], atol=1e-15)


def test_bloch_maximally_mixed():
    rho = XState(0.25, 0.25, 0.25, 0.25, 0, 0)
    assert bloch_extract(rho).astuple() == (0, 0, 0, 0, 0)
    assert bloch_assemble(BlochX(0, 0, 0, 0, 0)) == rho


def test_bloch_assemble_bell_and_pure():
    np.testing.assert_allclose(fields(bloch_assemble(BlochX(1, -1, 1, 0, 0))), [0.5, 0, 0, 0.5, 0.5, 0])
    alpha = 0.4
    s2, c2 = math.sin(2 * alpha), math.cos(2 * alpha)
    np.testing.assert_allclose(
        fields(bloch_assemble(BlochX(s2, -s2, 1, c2, c2))), fields(pure_family(alpha)), atol=1e-15
    )


def test_bloch_assemble_rejects_invalid():
    with pytest.raises(DomainError):
        bloch_assemble(BlochX(2, 0, 0, 0, 0))


@given(xstates())
def test_bloch_round_trip(rho):
    back = bloch_assemble(bloch_extract(rho))
    np.testing.assert_allclose(fields(back), fields(rho), rtol=0, atol=1e-12)
    b = bloch_extract(rho)
    again = bloch_extract(back)
    np.testing.assert_allclose(again.astuple(), b.astuple(), rtol=0, atol=1e-12)


def test_bloch_bounds_on_random_states(random_batch):
    b = bloch_extract(random_batch)
    r11, r22, r33, r44, r14, r23 = random_batch.astuple()
    assert np.all(np.abs(b.c1) <= 2 * np.sqrt(r22 * r33) + 2 * np.sqrt(r11 * r44) + 1e-15)
    for comp in b.astuple():
        assert np.all(np.abs(comp) <= 1 + 1e-12)
    assert validate(random_batch).ok


def test_to_dense():
    d = to_dense(pure_family(0.0))
    expected = np.zeros((4, 4))
    expected[0, 0] = 1
    np.testing.assert_array_equal(d, expected)
    d = to_dense(pure_family(math.pi / 4))
    for i, j in [(0, 0), (3, 3), (0, 3), (3, 0)]:
        assert d[i, j] == pytest.approx(0.5, abs=1e-15)
    d = to_dense(mixed_family(0.0))
    for i, j in [(1, 1), (2, 2), (1, 2), (2, 1)]:
        assert d[i, j] == 0.5
    assert np.count_nonzero(d) == 4


def test_validate():
    assert validate(pure_family(0.3)).ok
    bad = validate(XState(0.25, 0.25, 0.25, 0.25, 0.6, 0.0))
    assert not bad.ok and bad.min_block_det < 0
    zero = validate(XState(0, 0, 0, 0, 0, 0))
    assert not zero.ok and zero.trace == 0
    neg = validate(XState(1.1, -0.1, 0, 0, 0, 0))
    assert not neg.ok and neg.min_diag == pytest.approx(-0.1)


def test_family_invariants():
    for alpha in np.linspace(0, math.pi / 2, 33):
        b = bloch_extract(pure_family(alpha))
        assert b.c3 == pytest.approx(1, abs=1e-15)
        assert b.r == pytest.approx(math.cos(2 * alpha), abs=1e-15) == b.s
    for v in np.linspace(0, 1, 33):
        b = bloch_extract(mixed_family(v))
        assert b.r == 0 and b.s == 0


def test_json_round_trip(rng):
    rho = random_xstate(rng)
    text = rho.to_json()
    data = __import__("json").loads(text)
    assert list(data) == ["r11", "r22", "r33", "r44", "r14", "r23"]
    back = XState.from_json(text)
    assert fields(back).tolist() == fields(rho).tolist()
    # 17 significant digits
    assert f"{float(rho.r11):.17g}" in text


def test_batch_indexing():
    batch = pure_family(np.array([0.1, 0.2]))
    assert float(batch[1].r14) == pytest.approx(math.cos(0.2) * math.sin(0.2))
