from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import momenta
from diracverify import bosons
from diracverify.numerics import Momentum, minkowski_dot
from diracverify.wavefields import WaveSum, transport


def _closed_form_point(index, p, x):
    """Trigonometric spin field evaluated directly."""
    m, e = p.m, p.energy
    p1, p2, p3 = p.p
    th = 2 * p.dot(x)
    c, s = math.cos(th), math.sin(th)
    if index == 1:
        a = m / (e + p3)
        t = a * (p1 * c - p2 * s)
        return np.array([t, m * c, -m * s, -t])
    a = m / (e - p3)
    t = a * (p1 * c + p2 * s)
    return np.array([t, m * c, m * s, t])


def test_closed_form_matches_direct_trig(p, xs):
    for i in (1, 2):
        s = bosons.closed_form_S(i, p)
        for x in xs[:5]:
            assert np.allclose(s(x), _closed_form_point(i, p, x))


def test_closed_form_component_at_quarter_turn():
    p = Momentum(1.0)
    x = np.array([math.pi / 4, 0, 0, 0])  # 2 p.x = pi/2
    assert bosons.closed_form_S(1, p)(x)[2].real == pytest.approx(-1)


def test_rest_frame_values():
    p = Momentum(1.0)
    a = bosons.build_potential("A", "L", "psi1", p)
    assert np.allclose(a(np.zeros(4)) * p.energy, [0, 1, 0, 0])
    b = bosons.build_potential("B", "R", "phi2", p)
    assert np.allclose(b(np.zeros(4)), [1, 0, 0, 0])


@given(momenta)
@settings(max_examples=40, deadline=None)
def test_spin_field_identities(p):
    for i in (1, 2):
        r = bosons.spin_identities(bosons.spin_field(i, p))
        assert r["p.S"] <= 1e-9 * p.m ** 2
        assert r["S.S+m^2"] <= 1e-9 * p.m ** 2


def test_spin_norm_pointwise(p, xs):
    s = bosons.closed_form_S(2, p)
    for x in xs[:5]:
        v = s(x).real
        assert minkowski_dot(v, v) == pytest.approx(-p.m ** 2)


def test_entangled_equations(p):
    for closed in (False, True):
        r = bosons.entangled_residuals(p, closed_form=closed)
        assert max(r.values()) <= 1e-9 * p.m ** 2 * p.energy


def test_momentum_transport_is_not_zero(p):
    # p^a d_a multiplies the harmonic n by -i n m^2, since p.p = m^2
    s = bosons.closed_form_S(1, p)
    const = WaveSum.stack([WaveSum.constant(p, c) for c in p.four])
    t = transport(const, s)
    for n in (-2, 2):
        assert np.allclose(t.terms[n], -1j * n * p.m ** 2 * s.terms[n])
    assert bosons.momentum_transport(p) > 1


def test_potentials_field_equations(p):
    for kind in "AB":
        for src in ("phi1", "phi2", "psi1", "psi2"):
            v = bosons.build_potential(kind, "L", src, p)
            r = bosons.field_equation_residuals(v)
            assert max(r.values()) <= 1e-9 * v.components.scale() * p.energy * 4 * max(1, p.m ** 2)


def test_b_fields_are_constant(p):
    for src in ("phi1", "phi2", "psi1", "psi2"):
        for ch in "LR":
            b = bosons.build_potential("B", ch, src, p).components
            assert b.is_constant(1e-12)
            assert np.allclose(b.terms[0], p.four / p.energy)


def test_closed_form_match(p):
    r = bosons.closed_form_match(p)
    assert max(r.values()) <= 1e-12


def test_source_is_solution_plus_conjugate(p, ops):
    from diracverify.solutions import build_solutions
    s = build_solutions(p).phi1
    assert (bosons.source_field("phi1", p) - s - ops.C(s)).scale() == 0


def test_bad_arguments(p):
    with pytest.raises(ValueError):
        bosons.build_potential("C", "L", "phi1", p)
    with pytest.raises(ValueError):
        bosons.build_potential("A", "X", "phi1", p)
    with pytest.raises(ValueError):
        bosons.source_field("chi", p)
    with pytest.raises(ValueError):
        bosons.closed_form_S(3, p)


def test_parity_map_symmetry_point(xs):
    r = bosons.parity_map_residuals(Momentum(1.0, (0, 0, 1.3)), xs)
    assert r["printed"] <= 1e-12 and r["index_only"] <= 1e-12


def test_parity_map_generic_momentum_disagrees(p, xs):
    r = bosons.parity_map_residuals(p, xs)
    assert min(r.values()) > 1e-3
