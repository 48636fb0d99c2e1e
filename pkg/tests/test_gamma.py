from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import momenta
from diracverify.gamma import (anticommutator, build_representation, clifford_residual, hamiltonian_apply,
                               helicity_operator, sigma, spin_matrices)
from diracverify.numerics import GaussianRational, Momentum, exact_identity, exact_zeros, scale, to_float
from diracverify.wavefields import WaveSum


def test_clifford_exact(rep):
    assert clifford_residual(rep) == 0
    assert (anticommutator(rep, 0, 0) == scale(2, exact_identity())).all()
    assert (anticommutator(rep, 3, 3) == scale(-2, exact_identity())).all()
    assert (anticommutator(rep, 1, 2) == exact_zeros()).all()


def test_clifford_in_float_against_numpy(rep):
    g = [to_float(m) for m in rep.gamma]
    eta = np.diag([1, -1, -1, -1])
    for mu in range(4):
        for nu in range(4):
            assert np.allclose(g[mu] @ g[nu] + g[nu] @ g[mu], 2 * eta[mu, nu] * np.eye(4))


def test_gamma5_and_parity_are_diagonal(rep):
    assert np.array_equal(to_float(rep.gamma5), np.diag([1, -1, -1, 1]))
    assert np.array_equal(to_float(rep.parity), np.diag([1, 1, -1, -1]))
    g = rep.float_gamma
    assert np.allclose(1j * g[0] @ g[1] @ g[2] @ g[3], rep.float_gamma5)


def test_hermiticity_profile(rep):
    h = rep.hermiticity()
    assert h["gamma0"] == "hermitian"
    assert {h["gamma1"], h["gamma2"], h["gamma3"]} == {"anti-hermitian"}


def test_index_errors(rep):
    with pytest.raises(IndexError):
        anticommutator(rep, 0, 4)
    with pytest.raises(ValueError):
        sigma(rep, 2, 2)


def test_sigma_antisymmetric_and_spin_algebra(rep):
    assert (sigma(rep, 1, 2) == scale(-1, sigma(rep, 2, 1))).all()
    s1, s2, s3 = (to_float(m) for m in spin_matrices(rep))
    assert np.allclose(s1 @ s2 - s2 @ s1, 1j * s3)
    assert np.allclose(s1 @ s1, 0.25 * np.eye(4))


def test_helicity_along_z_is_minus_half_parity(rep):
    assert (sigma(rep, 1, 2) == scale(GaussianRational(Fraction(-1, 2)), rep.parity)).all()
    h = helicity_operator(rep, Momentum(1, (0, 0, 7.5)))
    assert np.allclose(h, -0.5 * rep.float_parity)


def test_helicity_undefined_at_rest(rep):
    with pytest.raises(ValueError):
        helicity_operator(rep, Momentum(1))


@given(momenta)
@settings(max_examples=25, deadline=None)
def test_hamiltonian_squares_to_energy_squared(p):
    rep = build_representation()
    f = WaveSum(p, {1: np.arange(4.0) + 1j, -1: np.ones(4)})
    h2 = hamiltonian_apply(rep, hamiltonian_apply(rep, f))
    assert (h2 - p.energy ** 2 * f).scale() <= 1e-12 * p.energy ** 2 * f.scale()


def test_representation_is_cached():
    assert build_representation() is build_representation()
