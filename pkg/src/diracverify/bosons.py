"""Proca (A) and Maxwell (B) potentials built from chiral currents, and spin fields.

A potential labelled by a source solution ``s`` is built from the chiral parts
of ``s + C s``: the source together with its charge-conjugate partner of
opposite energy.  For ``phi1`` the partner is exactly ``psi1``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .currents import current_field
from .gamma import build_representation
from .numerics import Momentum
from .operators import standard_ops
from .solutions import SOLUTION_IDS, build_solutions, chiral_projector
from .wavefields import WaveSum, divergence, dot_constant, minkowski_contract, transport


@dataclass(frozen=True)
class VectorPotential:
    components: WaveSum
    kind: str
    chirality: str
    source: str

    def __call__(self, x):
        return self.components(x)


def source_field(source: str, p: Momentum) -> WaveSum:
    """``s + C s`` for one of the four plane-wave solutions."""
    if source not in SOLUTION_IDS:
        raise ValueError(f"unknown solution {source!r}")
    s = build_solutions(p)[source]
    return s + standard_ops().C(s)


def chiral_currents(source: str, chirality: str, p: Momentum) -> tuple[WaveSum, WaveSum]:
    rep = build_representation()
    x = source_field(source, p).apply(chiral_projector(rep, chirality))
    return current_field(x, x, 0), current_field(x, x, 1)


def build_potential(kind: str, chirality: str, source: str, p: Momentum) -> VectorPotential:
    if kind not in ("A", "B"):
        raise ValueError(f"kind must be 'A' or 'B', got {kind!r}")
    if chirality not in ("L", "R"):
        raise ValueError(f"chirality must be 'L' or 'R', got {chirality!r}")
    j0, j1 = chiral_currents(source, chirality, p)
    sign = -1 if kind == "A" else 1
    field = 0.5 * (j0 + (sign / p.m ** 2) * j1)
    return VectorPotential(field, kind, chirality, source)


def field_equation_residuals(v: VectorPotential) -> dict[str, float]:
    """Wave-equation and gauge residuals (Proca for A, Maxwell for B)."""
    f = v.components
    mass2 = 4 * f.momentum.m ** 2 if v.kind == "A" else 0.0
    return {
        "wave": (f.box() + mass2 * f).scale(),
        "gauge": divergence(f).scale(),
    }


# cos(2 p.x) and sin(2 p.x) in the harmonic basis exp(-i n p.x)
_COS2 = {-2: 0.5, 2: 0.5}
_SIN2 = {-2: 0.5 / 1j, 2: -0.5 / 1j}


def _trig(p: Momentum, c_cos: complex, c_sin: complex) -> WaveSum:
    return WaveSum(p, {n: c_cos * _COS2[n] + c_sin * _SIN2[n] for n in (-2, 2)}, ())


def closed_form_S(index: int, p: Momentum) -> WaveSum:
    """Printed trigonometric spin fields, i.e. energy times A_L of psi1 / psi2."""
    m, e = p.m, p.energy
    p1, p2, p3 = p.p
    if index == 1:
        a = m / (e + p3)
        time = _trig(p, a * p1, -a * p2)
        comps = [time, _trig(p, m, 0), _trig(p, 0, -m), -time]
    elif index == 2:
        a = m / (e - p3)
        time = _trig(p, a * p1, a * p2)
        comps = [time, _trig(p, m, 0), _trig(p, 0, m), time]
    else:
        raise ValueError("spin field index must be 1 or 2")
    return WaveSum.stack(comps)


def spin_field(index: int, p: Momentum) -> WaveSum:
    """Spin field computed from currents: energy times A_L of psi1 or psi2."""
    source = {1: "psi1", 2: "psi2"}[index]
    return p.energy * build_potential("A", "L", source, p).components


def spin_identities(s: WaveSum) -> dict[str, float]:
    """Residuals of p.S = 0 and S.S = -m^2 as exact field identities."""
    p = s.momentum
    norm = minkowski_contract(s, s) + WaveSum.constant(p, p.m ** 2)
    return {"p.S": dot_constant(p.four, s).scale(), "S.S+m^2": norm.scale()}


def entangled_residuals(p: Momentum, closed_form: bool = False) -> dict[str, float]:
    """``S2^a d_a S1^b`` and ``S1^a d_a S2^b`` for all b."""
    get = closed_form_S if closed_form else spin_field
    s1, s2 = get(1, p), get(2, p)
    return {"S2.dS1": transport(s2, s1).scale(), "S1.dS2": transport(s1, s2).scale()}


def momentum_transport(p: Momentum, index: int = 1) -> float:
    """``p^a d_a S^b``.

    Each harmonic ``n`` picks up ``-i n p.p = -i n m^2``, so this does not vanish;
    only contractions with vectors orthogonal to p (such as the other S) do.
    """
    s = closed_form_S(index, p)
    const = WaveSum.stack([WaveSum.constant(p, c) for c in p.four])
    return transport(const, s).scale()


# parity acting on four-vector indices, and on momentum / position arguments
INDEX_FLIP = np.diag([1.0, 1.0, -1.0, -1.0])
ARGUMENT_FLIP = np.diag([1.0, -1.0, -1.0, 1.0])


def parity_map_residuals(p: Momentum, xs) -> dict[str, float]:
    """Two readings of ``P S1(p, x) = S2(Pp, Px)`` and its mirror.

    * ``printed``: flip the vector index and both arguments;
    * ``index_only``: flip the vector index, keep the arguments.
    """
    flipped_p = Momentum(p.m, tuple(ARGUMENT_FLIP[1:, 1:] @ np.array(p.p)))
    s = {i: closed_form_S(i, p) for i in (1, 2)}
    s_flip = {i: closed_form_S(i, flipped_p) for i in (1, 2)}
    out = {"printed": 0.0, "index_only": 0.0}
    for a, b in ((1, 2), (2, 1)):
        for x in xs:
            x = np.asarray(x, dtype=float)
            lhs = INDEX_FLIP @ s[a](x)
            out["printed"] = max(out["printed"],
                                 float(np.abs(lhs - s_flip[b](ARGUMENT_FLIP @ x)).max()))
            out["index_only"] = max(out["index_only"], float(np.abs(lhs - s[b](x)).max()))
    return out


def b_expected(p: Momentum) -> WaveSum:
    return WaveSum.constant(p, p.four / p.energy)


def closed_form_match(p: Momentum) -> dict[str, float]:
    """Residuals of computed A/B fields against the printed closed forms."""
    e = p.energy
    s1, s2 = closed_form_S(1, p), closed_form_S(2, p)
    expected_a = {"psi1": s1 / e, "phi1": s1 / e, "psi2": s2 / e, "phi2": -s2 / e}
    out = {}
    for src in SOLUTION_IDS:
        for ch in "LR":
            a = build_potential("A", ch, src, p).components
            b = build_potential("B", ch, src, p).components
            out[f"A_{ch}({src})"] = (a - expected_a[src]).scale()
            out[f"B_{ch}({src})"] = (b - b_expected(p)).scale()
    a2 = build_potential("A", "L", "psi2", p).components
    out["A_L(psi2)+A_L(phi2)"] = (a2 + build_potential("A", "L", "phi2", p).components).scale()
    return out

