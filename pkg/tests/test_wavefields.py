from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import finite_difference, momenta
from diracverify.numerics import Momentum
from diracverify.wavefields import (MomentumMismatch, WaveSum, divergence, minkowski_contract, sandwich,
                                    transport)


def _random_field(p, rng, shape=(4,)):
    return WaveSum(p, {n: rng.normal(size=shape) + 1j * rng.normal(size=shape) for n in (-2, -1, 0, 1, 2)})


def test_plane_wave_phase_convention(p):
    f = WaveSum.plane_wave(p, [1, 0, 0, 0], sign=1)
    x = np.array([0.3, 0.1, -0.2, 0.5])
    assert f(x)[0] == pytest.approx(np.exp(-1j * p.dot(x)))


@pytest.mark.parametrize("alpha", range(4))
def test_derivative_matches_finite_difference(p, rng, xs, alpha):
    f = _random_field(p, rng)
    d = f.derive(alpha)
    for x in xs[:5]:
        assert np.allclose(d(x), finite_difference(f, x, alpha), atol=1e-4 * f.scale() * p.energy ** 3)


def test_derive_up_raises_spatial_index(p, rng):
    f = _random_field(p, rng)
    for a, sign in enumerate((1, -1, -1, -1)):
        assert np.allclose(f.derive_up(a).terms[1], sign * f.derive(a).terms[1])


@given(momenta)
@settings(max_examples=30, deadline=None)
def test_box_is_minus_n2_m2(p):
    f = WaveSum(p, {2: np.ones(4), -1: np.arange(4.0), 0: np.ones(4)})
    b = f.box()
    assert np.allclose(b.terms[2], -4 * p.m ** 2 * f.terms[2])
    assert np.allclose(b.terms[-1], -(p.m ** 2) * f.terms[-1])
    assert np.allclose(b.terms[0], 0)


def test_conj_matches_pointwise_conjugate(p, rng, xs):
    f = _random_field(p, rng)
    for x in xs[:5]:
        assert np.allclose(f.conj()(x), np.conj(f(x)))


def test_like_terms_combine(p):
    f = WaveSum.plane_wave(p, [1, 2, 3, 4])
    g = f - f
    assert g.scale() == 0
    assert (f + f).terms[1].tolist() == [2, 4, 6, 8]


def test_product_adds_harmonics(p, rng, xs):
    f, g = _random_field(p, rng, ()), _random_field(p, rng, ())
    h = f * g
    assert set(h.harmonics()) == set(range(-4, 5))
    for x in xs[:5]:
        assert h(x) == pytest.approx(f(x) * g(x))


def test_sandwich_pointwise(p, rng, xs):
    f, g = _random_field(p, rng), _random_field(p, rng)
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    s = sandwich(f.conj(), m, g)
    for x in xs[:5]:
        assert s(x) == pytest.approx(np.conj(f(x)) @ m @ g(x))


def test_divergence_and_transport_against_finite_difference(p, rng, xs):
    v = _random_field(p, rng)
    u = _random_field(p, rng)
    div, tr = divergence(v), transport(u, v)
    for x in xs[:3]:
        fd = sum(finite_difference(lambda y: v(y)[a], x, a) for a in range(4))
        assert div(x) == pytest.approx(fd, abs=1e-4 * v.scale() * p.energy ** 3)
        fd_t = sum(u(x)[a] * finite_difference(v, x, a) for a in range(4))
        assert np.allclose(tr(x), fd_t, atol=1e-4 * u.scale() * v.scale() * p.energy ** 3)


def test_minkowski_contract(p, rng, xs):
    u, v = _random_field(p, rng), _random_field(p, rng)
    c = minkowski_contract(u, v)
    for x in xs[:3]:
        a, b = u(x), v(x)
        assert c(x) == pytest.approx(a[0] * b[0] - a[1:] @ b[1:])


def test_simplify_drops_roundoff(p):
    f = WaveSum(p, {0: [1.0], 2: [1e-17]})
    assert f.simplify().harmonics() == [0]
    assert f.simplify().is_constant()


def test_mismatched_momenta_refused():
    f = WaveSum.plane_wave(Momentum(1, (0, 0, 1)), [1, 0, 0, 0])
    g = WaveSum.plane_wave(Momentum(1, (0, 1, 0)), [1, 0, 0, 0])
    with pytest.raises(MomentumMismatch):
        f + g


def test_stack_and_component(p):
    a = WaveSum.plane_wave(p, 1.0)
    b = WaveSum.constant(p, 2.0)
    v = WaveSum.stack([a, b])
    assert v.shape == (2,)
    assert v.component(0)(np.zeros(4)) == pytest.approx(1.0)
    assert v.component(1)(np.ones(4)) == pytest.approx(2.0)
