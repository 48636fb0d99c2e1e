"""Plane-wave solutions, chirality/parity eigenstates and the chiral fields."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .gamma import GammaRep, build_representation, dirac_operator_apply, hamiltonian_apply, helicity_operator
from .numerics import Momentum
from .wavefields import WaveSum

SOLUTION_IDS = ("phi1", "phi2", "psi1", "psi2")
PAIRINGS = ("1", "2", "sum")
# Printed naming: projections of the positive-energy field are called Psi,
# projections of the negative-energy field are called Phi.
STATE_IDS = ("Psi+L", "Psi-L", "Psi+R", "Psi-R", "Phi+L", "Phi-L", "Phi+R", "Phi-R")


def solution_amplitudes(p: Momentum) -> dict[str, np.ndarray]:
    m, e = p.m, p.energy
    p1, p2, p3 = p.p
    n_plus = 1.0 / math.sqrt(2 * e * (e + p3))
    n_minus = 1.0 / math.sqrt(2 * e * (e - p3))
    return {
        "phi1": n_plus * np.array([m, -1j * (e + p3), p1 - 1j * p2, 0]),
        "phi2": n_minus * np.array([0, p2 - 1j * p1, e - p3, m]),
        "psi1": n_plus * np.array([p1 + 1j * p2, 0, m, -e - p3]),
        "psi2": n_minus * np.array([-1j * (e - p3), m, 0, p2 + 1j * p1]),
    }


@dataclass(frozen=True)
class SolutionSet:
    momentum: Momentum
    phi1: WaveSum
    phi2: WaveSum
    psi1: WaveSum
    psi2: WaveSum

    def __getitem__(self, name: str) -> WaveSum:
        if name not in SOLUTION_IDS:
            raise KeyError(name)
        return getattr(self, name)

    def items(self):
        return [(n, self[n]) for n in SOLUTION_IDS]

    @staticmethod
    def energy_sign(name: str) -> int:
        return 1 if name.startswith("phi") else -1


def build_solutions(p: Momentum, check: bool = True) -> SolutionSet:
    amps = solution_amplitudes(p)
    sols = SolutionSet(
        p,
        **{n: WaveSum.plane_wave(p, amps[n], SolutionSet.energy_sign(n)) for n in SOLUTION_IDS},
    )
    if check:
        rep = build_representation()
        for name, f in sols.items():
            if abs(np.vdot(amps[name], amps[name]).real - 1) > 1e-12:
                raise AssertionError(f"{name} is not unit normalized")
            if dirac_operator_apply(rep, f).scale() > 1e-9 * p.m:
                raise AssertionError(f"{name} does not solve the Dirac equation")
    return sols


def eigen_residual(rep: GammaRep, sols: SolutionSet, name: str) -> float:
    """``|H s - (+-E) s|`` for one solution."""
    f = sols[name]
    target = SolutionSet.energy_sign(name) * sols.momentum.energy * f
    return (hamiltonian_apply(rep, f) - target).scale()


def projector(rep: GammaRep, chirality: str, parity: str) -> np.ndarray:
    if chirality not in ("L", "R") or parity not in ("+", "-"):
        raise ValueError(f"bad labels ({chirality!r}, {parity!r})")
    one = np.eye(4)
    ps = 1 if parity == "+" else -1
    cs = -1 if chirality == "L" else 1
    return (one + ps * rep.float_parity) / 2 @ (one + cs * rep.float_gamma5) / 2


def project(state: WaveSum, chirality: str, parity: str, rep: GammaRep | None = None) -> WaveSum:
    rep = rep or build_representation()
    return state.apply(projector(rep, chirality, parity))


def chiral_projector(rep: GammaRep, chirality: str) -> np.ndarray:
    sign = -1 if chirality == "L" else 1
    return (np.eye(4) + sign * rep.float_gamma5) / 2


def pair_fields(sols: SolutionSet, pairing: str) -> tuple[WaveSum, WaveSum]:
    """The (positive-energy, negative-energy) fields a pairing seeds."""
    if pairing == "1":
        return sols.phi1, sols.psi1
    if pairing == "2":
        return sols.phi2, sols.psi2
    if pairing == "sum":
        return sols.phi1 + sols.phi2, sols.psi1 + sols.psi2
    raise ValueError(f"unknown pairing {pairing!r}; expected one of {PAIRINGS}")


@dataclass(frozen=True)
class ChiralStates:
    momentum: Momentum
    pairing: str
    phi: WaveSum
    psi: WaveSum
    states: dict[str, WaveSum] = field(repr=False)
    XL: WaveSum = field(repr=False)
    XR: WaveSum = field(repr=False)

    @property
    def majorana(self) -> WaveSum:
        return self.psi + self.phi

    def chirality_of(self, state_id: str) -> str:
        return state_id[-1]


def build_chiral(p: Momentum, pairing: str = "1", sols: SolutionSet | None = None) -> ChiralStates:
    rep = build_representation()
    sols = sols or build_solutions(p)
    phi, psi = pair_fields(sols, pairing)
    states = {}
    for sid in STATE_IDS:
        source = phi if sid.startswith("Psi") else psi
        states[sid] = project(source, sid[-1], sid[-2], rep)
    xl = (psi + phi).apply(chiral_projector(rep, "L"))
    xr = (psi + phi).apply(chiral_projector(rep, "R"))

    superposed_l = states["Phi-L"] + states["Phi+L"] + states["Psi-L"] + states["Psi+L"]
    superposed_r = states["Phi-R"] + states["Phi+R"] + states["Psi-R"] + states["Psi+R"]
    tol = 1e-12 * max(1.0, (psi + phi).scale())
    if (xl - superposed_l).scale() > tol or (xr - superposed_r).scale() > tol:
        raise AssertionError("projected form and superposition form of X disagree")
    return ChiralStates(p, pairing, phi, psi, states, xl, xr)


def helicity_residuals(p: Momentum, pairing: str = "1") -> tuple[float, float]:
    """Relative residuals ``|h X_L + X_L/2| / |X_L|`` and ``|h X_R - X_R/2| / |X_R|``."""
    rep = build_representation()
    h = helicity_operator(rep, p)
    st = build_chiral(p, pairing)
    rl = (st.XL.apply(h) + 0.5 * st.XL).norm() / st.XL.norm()
    rr = (st.XR.apply(h) - 0.5 * st.XR).norm() / st.XR.norm()
    return rl, rr
