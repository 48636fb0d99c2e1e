"""Real-linear spinor operators: matrices with or without complex conjugation.

An operator acts as ``psi -> L psi + A conj(psi)``.  A purely linear operator
(gamma5, P) has ``A = 0``; a purely antilinear one (C, T = PC, T~ = gamma5 C)
has ``L = 0`` and is the usual "matrix times conjugation" pair.  Sums such as
``P + gamma5 C`` are neither, but stay in the same algebra, which is closed
under composition:

    (L1, A1) o (L2, A2) = (L1 L2 + A1 conj(A2), L1 A2 + A1 conj(L2))

All matrices are held exactly.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .gamma import GammaRep, build_representation
from .numerics import (
    GaussianRational,
    conj,
    exact_equal,
    exact_identity,
    exact_zeros,
    is_exact,
    mat_mul,
    max_abs,
    scale,
    to_float,
)
from .wavefields import WaveSum


class AntilinearOp:
    __slots__ = ("linear", "antilinear")

    def __init__(self, matrix=None, conjugates: bool = False, *, linear=None, antilinear=None):
        if matrix is not None:
            if linear is not None or antilinear is not None:
                raise TypeError("give either (matrix, conjugates) or the two parts")
            if not is_exact(matrix):
                raise TypeError("operator matrices must be exact")
            linear, antilinear = (exact_zeros(), matrix) if conjugates else (matrix, exact_zeros())
        self.linear = exact_zeros() if linear is None else linear
        self.antilinear = exact_zeros() if antilinear is None else antilinear

    @classmethod
    def identity(cls) -> AntilinearOp:
        return cls(exact_identity())

    @classmethod
    def zero(cls) -> AntilinearOp:
        return cls(exact_zeros())

    @property
    def conjugates(self) -> bool | None:
        """True if purely antilinear, False if purely linear, None if mixed."""
        lin = any(v != 0 for v in self.linear.flat)
        anti = any(v != 0 for v in self.antilinear.flat)
        if lin and anti:
            return None
        return anti

    @property
    def matrix(self) -> np.ndarray:
        flag = self.conjugates
        if flag is None:
            raise ValueError("mixed operator has no single matrix")
        return self.antilinear if flag else self.linear

    # -- algebra -------------------------------------------------------------
    def compose(self, other: AntilinearOp) -> AntilinearOp:
        l1, a1, l2, a2 = self.linear, self.antilinear, other.linear, other.antilinear
        return AntilinearOp(
            linear=mat_mul(l1, l2) + mat_mul(a1, conj(a2)),
            antilinear=mat_mul(l1, a2) + mat_mul(a1, conj(l2)),
        )

    __matmul__ = compose

    def __mul__(self, other):
        if isinstance(other, AntilinearOp):
            return self.compose(other)
        return NotImplemented

    def __rmul__(self, c):
        """Scalar on the left: ``c * (op psi)``."""
        c = GaussianRational.coerce(c)
        return AntilinearOp(linear=scale(c, self.linear), antilinear=scale(c, self.antilinear))

    def __add__(self, other: AntilinearOp) -> AntilinearOp:
        return AntilinearOp(linear=self.linear + other.linear,
                            antilinear=self.antilinear + other.antilinear)

    def __sub__(self, other: AntilinearOp) -> AntilinearOp:
        return AntilinearOp(linear=self.linear - other.linear,
                            antilinear=self.antilinear - other.antilinear)

    def __neg__(self) -> AntilinearOp:
        return AntilinearOp(linear=-self.linear, antilinear=-self.antilinear)

    def __eq__(self, other):
        if not isinstance(other, AntilinearOp):
            return NotImplemented
        return exact_equal(self.linear, other.linear) and exact_equal(self.antilinear, other.antilinear)

    __hash__ = None

    def residual(self, other: AntilinearOp) -> float:
        """Max entry of ``self - other`` over both parts; exactly 0.0 on equality."""
        d = self - other
        return max(max_abs(d.linear), max_abs(d.antilinear))

    def power(self, n: int) -> AntilinearOp:
        out = AntilinearOp.identity()
        for _ in range(n):
            out = out @ self
        return out

    # -- action --------------------------------------------------------------
    def __call__(self, psi):
        lin, anti = to_float(self.linear), to_float(self.antilinear)
        if isinstance(psi, WaveSum):
            return psi.apply(lin) + psi.conj().apply(anti)
        psi = np.asarray(psi, dtype=complex)
        return lin @ psi + anti @ psi.conj()

    def __repr__(self):
        flag = self.conjugates
        if flag is None:
            return f"AntilinearOp(linear={self.linear.tolist()}, antilinear={self.antilinear.tolist()})"
        return f"AntilinearOp({self.matrix.tolist()}, conjugates={flag})"

    def describe(self) -> dict:
        """JSON-ready description with entries as ``[re, im]`` strings."""
        def enc(m):
            return [[f"{v.re}{'+' if v.im >= 0 else '-'}{abs(v.im)}i" for v in row] for row in m]
        return {"linear": enc(self.linear), "antilinear": enc(self.antilinear)}


def commutator(a: AntilinearOp, b: AntilinearOp) -> AntilinearOp:
    return a @ b - b @ a


def anticommutator(a: AntilinearOp, b: AntilinearOp) -> AntilinearOp:
    return a @ b + b @ a


def compose(*ops: AntilinearOp) -> AntilinearOp:
    out = AntilinearOp.identity()
    for op in ops:
        out = out @ op
    return out


HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class StandardOps:
    """The discrete-symmetry operators of one gamma representation."""

    def __init__(self, rep: GammaRep):
        self.rep = rep
        self.one = AntilinearOp.identity()
        self.g5 = AntilinearOp(rep.gamma5)
        self.P = AntilinearOp(rep.parity)
        self.C = AntilinearOp(rep.conj_matrix, conjugates=True)
        self.T = self.P @ self.C
        self.Tt = self.g5 @ self.C
        self.g5P = self.g5 @ self.P
        self.g5C = self.g5 @ self.C
        self.PC = self.P @ self.C
        self.g5PC = self.g5 @ self.P @ self.C

    def named(self) -> dict[str, AntilinearOp]:
        return {"1": self.one, "g5": self.g5, "P": self.P, "C": self.C,
                "g5P": self.g5P, "g5C": self.g5C, "PC": self.PC, "g5PC": self.g5PC}


@lru_cache(maxsize=1)
def standard_ops() -> StandardOps:
    return StandardOps(build_representation())
