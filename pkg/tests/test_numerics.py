from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from diracverify.numerics import (I, ONE, ZERO, GaussianRational, Momentum, ModeError, adjoint, exact_identity,
                                  exact_matrix, lower, mat_mul, max_abs, minkowski_dot, to_float)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_i_squared_is_minus_one():
    assert I * I == GaussianRational(-1)
    assert I.conjugate() == GaussianRational(0, -1)


def test_gaussian_rational_is_immutable():
    z = GaussianRational(1, 2)
    with pytest.raises(AttributeError):
        z.re = Fraction(3)


@given(gaussians, gaussians, gaussians)
def test_field_axioms_agree_with_complex(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert complex(a * b) == pytest.approx(complex(a) * complex(b), abs=1e-9)
    if b != ZERO:
        assert (a / b) * b == a


@given(gaussians)
def test_conjugate_gives_real_norm(a):
    n = a * a.conjugate()
    assert n.im == 0 and n.re >= 0


def test_floats_are_refused_in_exact_mode():
    with pytest.raises(ModeError):
        GaussianRational.coerce(0.5)
    with pytest.raises(ModeError):
        exact_matrix([[0.5 + 0j]])
    with pytest.raises(ModeError):
        mat_mul(exact_identity(), np.eye(4))


def test_exact_matrix_accepts_integer_complex_literals():
    m = exact_matrix([[1j, 0], [0, -1j]])
    assert m[0, 0] == I and m[1, 1] == -I
    assert adjoint(m)[0, 0] == -I


def test_mat_mul_matches_float():
    a = exact_matrix([[1, 1j], [2, Fraction(1, 3)]])
    b = exact_matrix([[0, -1j], [1, 1]])
    assert np.allclose(to_float(mat_mul(a, b)), to_float(a) @ to_float(b))


def test_identity_and_max_abs():
    assert max_abs(exact_identity() - exact_identity()) == 0
    assert exact_identity()[2, 2] == ONE


def test_minkowski_dot_and_lower():
    u = np.array([2.0, 1.0, 0.0, 3.0])
    assert minkowski_dot(u, u) == 4 - 1 - 9
    assert np.array_equal(lower(u), [2, -1, 0, -3])


@given(st.sampled_from([0.5, 1.0, 2.0]), st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3))
def test_momentum_is_on_shell(m, a, b, c):
    p = Momentum(m, (a, b, c))
    assert minkowski_dot(p.four, p.four) == pytest.approx(m * m, rel=1e-12, abs=1e-12)
    assert p.energy > 0


@pytest.mark.parametrize("m", [0, -1.0])
def test_momentum_rejects_nonpositive_mass(m):
    with pytest.raises(ValueError):
        Momentum(m, (0, 0, 1))


def test_rest_frame_phase():
    p = Momentum(2.0)
    assert p.dot([1.5, 7, 7, 7]) == pytest.approx(3.0)
