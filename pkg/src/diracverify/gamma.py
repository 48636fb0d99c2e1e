"""The gamma-matrix representation and the operators built from it."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .numerics import (
    GaussianRational,
    Momentum,
    adjoint,
    anticommutator as _anticomm,
    commutator,
    exact_equal,
    exact_identity,
    exact_matrix,
    exact_zeros,
    mat_mul,
    scale,
    to_float,
)
from .wavefields import WaveSum

i = 1j

GAMMA_ENTRIES = (
    [[0, i, 0, 0], [-i, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
    [[0, 0, 1, 0], [0, 0, 0, i], [-1, 0, 0, 0], [0, i, 0, 0]],
    [[0, 0, i, 0], [0, 0, 0, -1], [i, 0, 0, 0], [0, 1, 0, 0]],
    [[0, i, 0, 0], [i, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
)

# Matrix part of the antilinear conjugation operator; the full operator is
# this matrix composed with complex conjugation.
CONJUGATION_ENTRIES = [[0, 0, 1, 0], [0, 0, 0, i], [1, 0, 0, 0], [0, i, 0, 0]]

G = (1, -1, -1, -1)


class RepresentationError(AssertionError):
    pass


@dataclass(frozen=True, eq=False)
class GammaRep:
    gamma: tuple[np.ndarray, ...]
    gamma5: np.ndarray
    parity: np.ndarray
    conj_matrix: np.ndarray

    @cached_property
    def float_gamma(self) -> tuple[np.ndarray, ...]:
        return tuple(to_float(g) for g in self.gamma)

    @cached_property
    def float_gamma5(self) -> np.ndarray:
        return to_float(self.gamma5)

    @cached_property
    def float_parity(self) -> np.ndarray:
        return to_float(self.parity)

    @cached_property
    def float_conj_matrix(self) -> np.ndarray:
        return to_float(self.conj_matrix)

    def hermiticity(self) -> dict[str, str]:
        """Which of Hermitian / anti-Hermitian each printed matrix actually is."""
        named = {f"gamma{k}": g for k, g in enumerate(self.gamma)}
        named.update(gamma5=self.gamma5, parity=self.parity)
        out = {}
        for name, mat in named.items():
            dag = adjoint(mat)
            if exact_equal(dag, mat):
                out[name] = "hermitian"
            elif exact_equal(dag, -mat):
                out[name] = "anti-hermitian"
            else:
                out[name] = "neither"
        return out


def _diag_pm1(mat: np.ndarray) -> bool:
    for r in range(4):
        for c in range(4):
            v = mat[r, c]
            if r != c and v != 0:
                return False
            if r == c and v not in (GaussianRational(1), GaussianRational(-1)):
                return False
    return True


@lru_cache(maxsize=1)
def build_representation() -> GammaRep:
    gamma = tuple(exact_matrix(rows) for rows in GAMMA_ENTRIES)
    iu = GaussianRational(0, 1)
    g5 = scale(iu, mat_mul(mat_mul(gamma[0], gamma[1]), mat_mul(gamma[2], gamma[3])))
    parity = scale(-iu, mat_mul(gamma[1], gamma[2]))
    rep = GammaRep(gamma, g5, parity, exact_matrix(CONJUGATION_ENTRIES))

    if clifford_residual(rep) != 0:
        raise RepresentationError("gamma matrices violate the Clifford relation")
    if not (_diag_pm1(g5) and _diag_pm1(parity)):
        raise RepresentationError("gamma5 and parity must be diagonal with entries +-1")
    if not exact_equal(commutator(g5, parity), exact_zeros()):
        raise RepresentationError("gamma5 and parity must commute")
    return rep


def anticommutator(rep: GammaRep, mu: int, nu: int) -> np.ndarray:
    if mu not in range(4) or nu not in range(4):
        raise IndexError(f"gamma index out of range: ({mu}, {nu})")
    return _anticomm(rep.gamma[mu], rep.gamma[nu])


def clifford_residual(rep: GammaRep):
    """Largest entry of {g^mu, g^nu} - 2 g^{mu nu} over all 16 pairs (exact)."""
    worst = 0
    for mu in range(4):
        for nu in range(4):
            target = scale(2 * G[mu], exact_identity()) if mu == nu else exact_zeros()
            diff = anticommutator(rep, mu, nu) - target
            worst = max([worst, *(abs(v) for v in diff.flat)])
    return worst


def sigma(rep: GammaRep, mu: int, nu: int) -> np.ndarray:
    """Lorentz generator (i/4)[g^mu, g^nu], exact."""
    if mu not in range(4) or nu not in range(4):
        raise IndexError(f"gamma index out of range: ({mu}, {nu})")
    if mu == nu:
        raise ValueError("sigma(mu, mu) is the zero generator")
    return scale(GaussianRational(0, Fraction(1, 4)), commutator(rep.gamma[mu], rep.gamma[nu]))


def spin_matrices(rep: GammaRep) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Spatial spin components S1 = Sigma^23, S2 = Sigma^31, S3 = Sigma^12."""
    return sigma(rep, 2, 3), sigma(rep, 3, 1), sigma(rep, 1, 2)


def helicity_operator(rep: GammaRep, p: Momentum) -> np.ndarray:
    norm = p.norm3
    if norm == 0:
        raise ValueError("helicity is undefined at zero spatial momentum")
    s = [to_float(m) for m in spin_matrices(rep)]
    return sum(pk * sk for pk, sk in zip(p.p, s)) / norm


def dirac_operator_apply(rep: GammaRep, f: WaveSum) -> WaveSum:
    """``(i g^alpha d_alpha - m) f`` evaluated in the term algebra."""
    return slash_apply(rep, f) - f.momentum.m * f


def slash_apply(rep: GammaRep, f: WaveSum) -> WaveSum:
    """``i g^alpha d_alpha f``."""
    out = WaveSum.zero(f.momentum, f.shape)
    for a, g in enumerate(rep.float_gamma):
        out = out + 1j * f.derive(a).apply(g)
    return out


def hamiltonian_apply(rep: GammaRep, f: WaveSum) -> WaveSum:
    """``g^0 (-i g^k d_k + m) f`` with exact spatial derivatives."""
    g = rep.float_gamma
    inner = f.momentum.m * f
    for k in (1, 2, 3):
        inner = inner - 1j * f.derive(k).apply(g[k])
    return inner.apply(g[0])
