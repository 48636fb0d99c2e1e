"""Exact and numerical verification of a chiral gamma-matrix representation.

Submodules:

* ``numerics``: Gaussian-rational scalars, Minkowski helpers, ``Momentum``
* ``wavefields``: ``WaveSum`` plane-wave sums with exact derivatives
* ``gamma``: the representation, sigma, helicity, Hamiltonian
* ``operators``: ``AntilinearOp`` and the standard C, P, gamma5, T operators
* ``solutions``: plane-wave solutions, eigenstates, chiral fields
* ``currents``, ``bosons``: currents, potentials and spin fields
* ``symmetry``, ``lie``: operator identities and bracket tables
* ``claims``, ``checks``, ``cli``: the claim registry and its front ends
"""
from __future__ import annotations

from .claims import Report, RunConfig, list_claims, run
from .gamma import build_representation
from .numerics import GaussianRational, Momentum
from .operators import AntilinearOp, standard_ops
from .results import ClaimResult
from .solutions import build_chiral, build_solutions
from .wavefields import WaveSum

__all__ = [
    "AntilinearOp", "ClaimResult", "GaussianRational", "Momentum", "Report", "RunConfig", "WaveSum",
    "build_chiral", "build_representation", "build_solutions", "list_claims", "run", "standard_ops",
]
