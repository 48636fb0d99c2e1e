from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from diracverify.numerics import GaussianRational, exact_matrix, to_float
from diracverify.operators import AntilinearOp, anticommutator, commutator, compose

small = st.integers(-2, 2)
entries = st.builds(GaussianRational, small, small)
matrices = st.lists(entries, min_size=16, max_size=16).map(
    lambda v: np.array(v, dtype=object).reshape(4, 4))
operators = st.builds(AntilinearOp, matrices, st.booleans())


@given(operators, operators, operators)
@settings(max_examples=100, deadline=None)
def test_composition_is_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


@given(operators, operators)
@settings(max_examples=50, deadline=None)
def test_composition_matches_action(a, b):
    psi = np.array([1 + 2j, -1j, 0.5, 3 - 1j])
    assert np.allclose((a @ b)(psi), a(b(psi)))


def test_composition_rule_on_flags():
    m = exact_matrix([[1j, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    a = AntilinearOp(m, conjugates=True)
    lin = AntilinearOp(m)
    assert (a @ a).conjugates is False
    assert (a @ lin).conjugates is True
    # (M, true)(N, false) = (M conj(N), true)
    assert (a @ lin).matrix[0, 0] == GaussianRational(1)


def test_antilinearity(ops):
    psi = np.array([1, 2j, -1, 0.5])
    assert np.allclose(ops.C(1j * psi), -1j * ops.C(psi))
    assert np.allclose(ops.P(1j * psi), 1j * ops.P(psi))


def test_standard_identities(ops):
    one = AntilinearOp.identity()
    assert ops.C @ ops.C == one
    assert ops.T @ ops.T == -one
    assert ops.Tt @ ops.Tt == -one
    assert commutator(ops.T, ops.Tt) == AntilinearOp.zero()


def test_mixed_sums_are_real_linear(ops):
    x = ops.P + ops.g5C
    assert x.conjugates is None
    assert x @ x == AntilinearOp.zero()
    psi = np.array([1, 1j, 2, -1])
    assert np.allclose(x(psi), ops.P(psi) + ops.g5C(psi))
    assert np.allclose(x(2 * psi), 2 * x(psi))


def test_rational_scalars(ops):
    half = Fraction(1, 2) * ops.C
    assert (half + half) == ops.C
    with pytest.raises(TypeError):
        0.5 * ops.C


def test_compose_and_power(ops):
    assert compose(ops.C, ops.P, ops.T) == ops.C @ ops.P @ ops.T
    assert ops.T.power(4) == AntilinearOp.identity()
    assert anticommutator(ops.g5, ops.g5) == Fraction(2) * AntilinearOp.identity()


def test_float_action_matches_matrix(ops, rep):
    psi = np.array([1 + 1j, 2, -1j, 0])
    assert np.allclose(ops.C(psi), to_float(rep.conj_matrix) @ psi.conj())


def test_describe_is_json_ready(ops):
    import json
    json.dumps(ops.T.describe())
