"""Finite sums of plane waves sharing one momentum.

A :class:`WaveSum` stores ``{n: c_n}`` and represents

    f(x) = sum_n c_n * exp(-i n p.x)

where ``p`` is the field's :class:`~diracverify.numerics.Momentum`.  The
coefficient arrays all have one shape: ``(4,)`` for spinors and four-vectors
(contravariant), ``()`` for scalars.  Harmonics are integers, so combining
like terms is exact; derivatives are exact multiplications.

Positive-energy spinors sit at ``n = +1``, negative-energy ones at ``n = -1``;
bilinears land on ``n`` in ``{-2, 0, 2}``.
"""
from __future__ import annotations

from typing import Callable, Iterable, Mapping

import numpy as np

from .numerics import Momentum, minkowski_dot

# Coefficients below this fraction of the largest one are rounding noise.
SIMPLIFY_RTOL = 1e-14


class MomentumMismatch(ValueError):
    pass


class WaveSum:
    __slots__ = ("momentum", "terms", "shape")

    def __init__(self, momentum: Momentum, terms: Mapping[int, np.ndarray], shape=None):
        self.momentum = momentum
        clean: dict[int, np.ndarray] = {}
        for n, c in terms.items():
            c = np.asarray(c, dtype=complex)
            if shape is None:
                shape = c.shape
            elif c.shape != tuple(shape):
                raise ValueError(f"coefficient shape {c.shape} != {tuple(shape)}")
            clean[int(n)] = clean.get(int(n), 0) + c
        self.terms = dict(sorted(clean.items()))
        self.shape = tuple(shape) if shape is not None else ()

    # -- construction ------------------------------------------------------
    @classmethod
    def plane_wave(cls, momentum: Momentum, amplitude, sign: int = 1) -> WaveSum:
        """``amplitude * exp(-i sign p.x)``; ``sign=+1`` is positive energy."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return cls(momentum, {sign: amplitude})

    @classmethod
    def zero(cls, momentum: Momentum, shape=(4,)) -> WaveSum:
        return cls(momentum, {}, shape)

    @classmethod
    def constant(cls, momentum: Momentum, value) -> WaveSum:
        value = np.asarray(value, dtype=complex)
        return cls(momentum, {0: value}, value.shape)

    @classmethod
    def stack(cls, parts: Iterable[WaveSum]) -> WaveSum:
        """Stack scalar fields into one vector-valued field."""
        parts = list(parts)
        mom = _common_momentum(*parts)
        keys = sorted(set().union(*(f.terms for f in parts)))
        terms = {n: np.array([f.terms.get(n, 0j) for f in parts]) for n in keys}
        return cls(mom, terms, (len(parts),))

    # -- algebra -----------------------------------------------------------
    def _combine(self, other: WaveSum, sign: int) -> WaveSum:
        if not isinstance(other, WaveSum):
            return NotImplemented
        _common_momentum(self, other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        terms = {n: c.copy() for n, c in self.terms.items()}
        for n, c in other.terms.items():
            terms[n] = terms.get(n, 0) + sign * c
        return WaveSum(self.momentum, terms, self.shape)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return WaveSum(self.momentum, {n: -c for n, c in self.terms.items()}, self.shape)

    def __mul__(self, s):
        if isinstance(s, WaveSum):
            return product(self, s, np.multiply)
        s = complex(s)
        return WaveSum(self.momentum, {n: s * c for n, c in self.terms.items()}, self.shape)

    __rmul__ = __mul__

    def __truediv__(self, s):
        return self * (1.0 / complex(s))

    def apply(self, matrix) -> WaveSum:
        """Left-multiply every coefficient by a float matrix."""
        m = np.asarray(matrix, dtype=complex)
        return WaveSum(self.momentum, {n: m @ c for n, c in self.terms.items()},
                       (m.shape[0],))

    def conj(self) -> WaveSum:
        """Complex conjugate of the field: coefficients conjugated, phases flipped."""
        return WaveSum(self.momentum, {-n: c.conj() for n, c in self.terms.items()}, self.shape)

    def component(self, i: int) -> WaveSum:
        return WaveSum(self.momentum, {n: c[i] for n, c in self.terms.items()}, ())

    def components(self) -> list[WaveSum]:
        return [self.component(i) for i in range(self.shape[0])]

    # -- calculus ----------------------------------------------------------
    def derive(self, alpha: int) -> WaveSum:
        """Exact partial derivative with respect to x^alpha (lower index)."""
        if alpha not in (0, 1, 2, 3):
            raise IndexError(f"index {alpha} out of range")
        p_low = self.momentum.covariant[alpha]
        return WaveSum(self.momentum,
                       {n: (-1j * n * p_low) * c for n, c in self.terms.items()},
                       self.shape)

    def derive_up(self, alpha: int) -> WaveSum:
        """Exact partial derivative with the index raised."""
        if alpha not in (0, 1, 2, 3):
            raise IndexError(f"index {alpha} out of range")
        p_up = self.momentum.four[alpha]
        return WaveSum(self.momentum,
                       {n: (-1j * n * p_up) * c for n, c in self.terms.items()},
                       self.shape)

    def box(self) -> WaveSum:
        """d'Alembertian, summed term by term through the metric."""
        out = WaveSum.zero(self.momentum, self.shape)
        for a in range(4):
            out = out + self.derive(a).derive_up(a)
        return out

    # -- inspection --------------------------------------------------------
    def __call__(self, x) -> np.ndarray:
        phase = self.momentum.dot(x)
        total = np.zeros(self.shape, dtype=complex)
        for n, c in self.terms.items():
            total = total + c * np.exp(-1j * n * phase)
        return total

    def scale(self) -> float:
        if not self.terms:
            return 0.0
        return max(float(np.abs(c).max(initial=0.0)) for c in self.terms.values())

    def norm(self) -> float:
        """Root-mean-square size over spacetime: distinct harmonics are orthogonal."""
        return float(np.sqrt(sum(np.sum(np.abs(c) ** 2) for c in self.terms.values())))

    def simplify(self, rtol: float = SIMPLIFY_RTOL) -> WaveSum:
        """Drop coefficients at or below ``rtol`` times the largest one."""
        top = self.scale()
        keep = {}
        for n, c in self.terms.items():
            c = np.where(np.abs(c) <= rtol * top, 0, c)
            if np.any(c != 0):
                keep[n] = c
        return WaveSum(self.momentum, keep, self.shape)

    def is_constant(self, rtol: float = SIMPLIFY_RTOL) -> bool:
        return all(n == 0 for n in self.simplify(rtol).terms)

    def is_zero(self, atol: float) -> bool:
        return self.scale() <= atol

    def max_over(self, xs) -> float:
        """Largest entry magnitude of the field over sample points."""
        return max((float(np.abs(self(x)).max(initial=0.0)) for x in xs), default=0.0)

    def harmonics(self) -> list[int]:
        return list(self.terms)

    def __repr__(self):
        body = ", ".join(f"{n:+d}: {np.round(c, 6)}" for n, c in self.terms.items())
        return f"WaveSum(m={self.momentum.m}, p={self.momentum.p}, {{{body}}})"


def _common_momentum(*fields: WaveSum) -> Momentum:
    moms = {f.momentum for f in fields}
    if len(moms) != 1:
        raise MomentumMismatch("fields built on different momenta cannot be combined")
    return moms.pop()


def product(f: WaveSum, g: WaveSum, op: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> WaveSum:
    """Pointwise product under ``op`` on coefficients; harmonics add."""
    mom = _common_momentum(f, g)
    terms: dict[int, np.ndarray] = {}
    shape = None
    for n1, c1 in f.terms.items():
        for n2, c2 in g.terms.items():
            c = np.asarray(op(c1, c2), dtype=complex)
            shape = c.shape
            terms[n1 + n2] = terms.get(n1 + n2, 0) + c
    if shape is None:
        shape = np.asarray(op(np.zeros(f.shape, complex), np.zeros(g.shape, complex))).shape
    return WaveSum(mom, terms, shape)


def derive(f: WaveSum, alpha: int) -> WaveSum:
    return f.derive(alpha)


def conjugate_transpose_field(f: WaveSum) -> WaveSum:
    """Row-spinor partner of ``f``: amplitudes conjugated, phase signs flipped.

    Coefficients of a 1-d spinor are stored the same way as rows or columns;
    :func:`sandwich` treats its left argument as the row side.
    """
    return f.conj()


def sandwich(row: WaveSum, matrix, col: WaveSum) -> WaveSum:
    """Scalar field ``row^T M col`` where ``row`` is already conjugated."""
    m = np.asarray(matrix, dtype=complex)
    return product(row, col, lambda a, b: a @ m @ b)


def simplify(f: WaveSum, rtol: float = SIMPLIFY_RTOL) -> WaveSum:
    return f.simplify(rtol)


def divergence(v: WaveSum) -> WaveSum:
    """``d_alpha V^alpha`` for a contravariant vector field."""
    out = WaveSum.zero(v.momentum, ())
    for a in range(4):
        out = out + v.component(a).derive(a)
    return out


def minkowski_contract(u: WaveSum, v: WaveSum) -> WaveSum:
    """Scalar field ``u_alpha v^alpha`` of two vector fields."""
    return product(u, v, lambda a, b: minkowski_dot(a, b))


def dot_constant(vec, v: WaveSum) -> WaveSum:
    """Scalar field ``vec_alpha v^alpha`` for a fixed contravariant four-vector."""
    vec = np.asarray(vec, dtype=complex)
    return WaveSum(v.momentum, {n: minkowski_dot(vec, c) for n, c in v.terms.items()}, ())


def transport(u: WaveSum, v: WaveSum) -> WaveSum:
    """Vector field ``u^alpha d_alpha v^beta``."""
    out = WaveSum.zero(u.momentum, v.shape)
    for a in range(4):
        out = out + product(u.component(a), v.derive(a), lambda s, c: s * c)
    return out
