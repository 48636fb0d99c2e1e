"""Scalars, four-vectors, momenta and 4x4 complex matrices.

Two arithmetic modes coexist:

* exact -- numpy ``object`` arrays holding :class:`GaussianRational` entries,
  used for every momentum-independent operator identity;
* float -- ordinary ``complex128`` arrays.

Mixing the two in one product is refused; call :func:`to_float` first.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


class ModeError(TypeError):
    """Raised when exact and float operands meet without explicit promotion."""


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    raise TypeError(f"exact arithmetic needs a rational, got {type(v).__name__}")


class GaussianRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, v) -> GaussianRational:
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, (int, Fraction)):
            return cls(v, 0)
        if isinstance(v, complex) or isinstance(v, float):
            raise ModeError("float value in exact arithmetic; promote explicitly")
        raise TypeError(f"cannot use {type(v).__name__} as an exact scalar")

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        n = self * o.conjugate()
        return GaussianRational(n.re / d, n.im / d)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __abs__(self):
        return math.hypot(self.re, self.im)

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i)"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def exact_matrix(rows) -> np.ndarray:
    """Build an exact 4x4 matrix from nested lists of ints/Fractions/complex ints.

    Python complex literals are accepted only when both parts are integers
    (``1j``, ``-1j``), so the printed gamma entries can be typed naturally.
    """
    out = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if isinstance(v, complex):
                if v.real != int(v.real) or v.imag != int(v.imag):
                    raise ModeError(f"non-integer complex literal {v!r}")
                v = GaussianRational(int(v.real), int(v.imag))
            out[i, j] = GaussianRational.coerce(v)
    return out


def exact_identity(n: int = 4) -> np.ndarray:
    out = np.full((n, n), ZERO, dtype=object)
    for i in range(n):
        out[i, i] = ONE
    return out


def exact_zeros(n: int = 4) -> np.ndarray:
    return np.full((n, n), ZERO, dtype=object)


def is_exact(a: np.ndarray) -> bool:
    return a.dtype == object


def to_float(a: np.ndarray) -> np.ndarray:
    if not is_exact(a):
        return np.asarray(a, dtype=complex)
    return np.vectorize(complex, otypes=[complex])(a)


def _check_modes(*arrays: np.ndarray) -> bool:
    modes = {is_exact(a) for a in arrays}
    if len(modes) > 1:
        raise ModeError("mixing exact and float matrices; call to_float() first")
    return modes.pop()


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product; exact when both operands are exact."""
    _check_modes(a, b)
    return a @ b


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    if is_exact(a):
        return np.vectorize(GaussianRational.conjugate, otypes=[object])(a).T.copy()
    return a.conj().T


def conj(a: np.ndarray) -> np.ndarray:
    """Entrywise complex conjugate, mode preserving."""
    if is_exact(a):
        return np.vectorize(GaussianRational.conjugate, otypes=[object])(a)
    return a.conj()


def scale(c, a: np.ndarray) -> np.ndarray:
    if is_exact(a):
        c = GaussianRational.coerce(c)
        return np.vectorize(lambda v: c * v, otypes=[object])(a)
    return complex(c) * a


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return mat_mul(a, b) - mat_mul(b, a)


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return mat_mul(a, b) + mat_mul(b, a)


def exact_equal(a: np.ndarray, b: np.ndarray) -> bool:
    _check_modes(a, b)
    return bool(np.all(a == b))


def max_abs(a: np.ndarray) -> float:
    """Max-norm of a matrix in either mode (exact entries go through ``abs``)."""
    if a.size == 0:
        return 0.0
    if is_exact(a):
        return max(abs(v) for v in a.flat)
    return float(np.abs(a).max())


# -- four-vectors -----------------------------------------------------------

def lower(v) -> np.ndarray:
    """Lower the index of a contravariant four-vector (spatial parts negated)."""
    return METRIC @ np.asarray(v)


def minkowski_dot(u, v):
    u = np.asarray(u)
    v = np.asarray(v)
    return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3]


@dataclass(frozen=True)
class Momentum:
    """On-shell momentum of a particle of mass ``m`` with spatial part ``p``."""

    m: float
    p: tuple[float, float, float] = (0.0, 0.0, 0.0)
    energy: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m!r}")
        p = tuple(float(c) for c in self.p)
        if len(p) != 3:
            raise ValueError("spatial momentum needs three components")
        object.__setattr__(self, "m", float(self.m))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "energy", math.sqrt(sum(c * c for c in p) + self.m ** 2))

    @property
    def four(self) -> np.ndarray:
        """Contravariant four-momentum ``(E, p1, p2, p3)``."""
        return np.array([self.energy, *self.p])

    @property
    def covariant(self) -> np.ndarray:
        return lower(self.four)

    @property
    def norm3(self) -> float:
        return math.sqrt(sum(c * c for c in self.p))

    def dot(self, x) -> float:
        """Phase argument ``p.x`` with the mostly-minus metric."""
        return float(minkowski_dot(self.four, np.asarray(x, dtype=float)))
