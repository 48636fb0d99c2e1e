"""Bilinear four-currents, derivative currents and the eigenstate census."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .gamma import build_representation
from .numerics import Momentum
from .solutions import STATE_IDS, build_chiral
from .wavefields import WaveSum, divergence as _divergence, sandwich


@dataclass(frozen=True)
class Current:
    components: WaveSum
    left: str = "X"
    right: str = "Y"
    order: int = 0

    def divergence(self) -> WaveSum:
        return _divergence(self.components)

    def __call__(self, x):
        return self.components(x)


def _derivatives(f: WaveSum, k: int, up: bool):
    """All k-fold partial derivatives of f keyed by index tuple."""
    out = {(): f}
    for _ in range(k):
        nxt = {}
        for idx, g in out.items():
            for a in range(4):
                nxt[idx + (a,)] = g.derive_up(a) if up else g.derive(a)
        out = nxt
    return out


def current_field(x: WaveSum, y: WaveSum, k: int = 0) -> WaveSum:
    """Vector field ``d_{mu..} Xbar gamma^alpha d^{mu..} Y`` with Xbar = X^dagger gamma^0."""
    if k not in (0, 1, 2, 3):
        raise ValueError(f"derivative order must be 0..3, got {k}")
    if x.momentum != y.momentum:
        raise ValueError("currents need both fields on one momentum")
    rep = build_representation()
    g = rep.float_gamma
    bilin = [g[0] @ g[a] for a in range(4)]
    dx = _derivatives(x.conj(), k, up=False)
    dy = _derivatives(y, k, up=True)
    parts = []
    for a in range(4):
        comp = WaveSum.zero(x.momentum, ())
        for idx in dx:
            comp = comp + sandwich(dx[idx], bilin[a], dy[idx])
        parts.append(comp)
    return WaveSum.stack(parts)


def current(x: WaveSum, y: WaveSum, k: int = 0, left: str = "X", right: str = "Y") -> Current:
    return Current(current_field(x, y, k), left, right, k)


def divergence(c: Current) -> WaveSum:
    return c.divergence()


@dataclass(frozen=True)
class CensusEntry:
    left: str
    right: str
    zero: bool
    max_divergence: float
    scale: float

    @property
    def conserved(self) -> bool:
        return self.max_divergence <= 1e-9 * max(self.scale, 1e-300)


def census_64(p: Momentum, pairing: str = "sum", xs=None, zero_tol: float = 1e-12) -> list[CensusEntry]:
    """Currents between every ordered pair of the eight eigenstates."""
    st = build_chiral(p, pairing)
    if xs is None:
        xs = np.random.default_rng(0).uniform(-5, 5, size=(20, 4))
    out = []
    for a, b in itertools.product(STATE_IDS, STATE_IDS):
        j = current_field(st.states[a], st.states[b])
        zero = j.scale() <= zero_tol
        div = _divergence(j)
        out.append(CensusEntry(a, b, zero, div.max_over(xs), j.scale()))
    return out


def superposition_divergence(p: Momentum, parity: str, pairing: str = "sum", xs=None) -> tuple[float, float]:
    """Max |div j| for the unit-coefficient sum of all eigenstates of one parity.

    Returns ``(max |divergence| over xs, scale of the current)``.
    """
    st = build_chiral(p, pairing)
    total = WaveSum.zero(p, (4,))
    for sid in STATE_IDS:
        if sid[-2] == parity:
            total = total + st.states[sid]
    j = current_field(total, total)
    if xs is None:
        xs = np.random.default_rng(0).uniform(-5, 5, size=(20, 4))
    return _divergence(j).max_over(xs), j.scale()
