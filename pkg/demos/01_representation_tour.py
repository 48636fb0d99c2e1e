"""A tour of the chiral gamma representation and its plane-wave solutions.

Run with ``python demos/01_representation_tour.py``.
"""
from __future__ import annotations

import numpy as np

from diracverify.gamma import build_representation, clifford_residual, hamiltonian_apply
from diracverify.numerics import Momentum, to_float
from diracverify.solutions import build_solutions, eigen_residual

np.set_printoptions(precision=3, suppress=True)
rep = build_representation()

# The Clifford relation is checked in exact Gaussian-rational arithmetic,
# so the residual is a true zero rather than a small float.
print("Clifford residual:", clifford_residual(rep))

# gamma5 and the parity matrix come out diagonal; this is what makes the
# chirality/parity eigenstates single spinor components.
print("gamma5 =", to_float(rep.gamma5).real.diagonal())
print("P      =", to_float(rep.parity).real.diagonal())

p = Momentum(1.0, (0.3, -0.8, 1.1))
sols = build_solutions(p)
print(f"\nE = {p.energy:.4f} for m = {p.m}, p = {p.p}")
for name, field in sols.items():
    print(f"  {name}: |H s -+ E s| = {eigen_residual(rep, sols, name):.2e}")

# Evaluate a solution at a point and compare H applied in the term algebra
# with the eigenvalue times the field.
x = np.array([0.2, 1.0, -0.5, 0.3])
print("\nphi1(x)    =", sols.phi1(x))
print("H phi1 / E =", hamiltonian_apply(rep, sols.phi1)(x) / p.energy)
