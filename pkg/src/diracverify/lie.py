"""Structure-constant tables, a Jacobi checker and the 12-generator table.

Text format, one statement per line::

    basis a1 a2 b3          # optional; otherwise names are collected in order
    bracket a1 a2 = 2*b3
    bracket b3 a1 = -1/2*a1 + abar1
    bracket a1 a1 = 0

Brackets not listed (and not implied by antisymmetry) are *missing*, which is
different from zero.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np


class IncompleteTable(KeyError):
    def __init__(self, pair):
        super().__init__(f"bracket [{pair[0]}, {pair[1]}] is not defined")
        self.pair = pair


class TableError(ValueError):
    pass


@dataclass
class StructureConstants:
    basis: list[str]
    brackets: dict[tuple[int, int], np.ndarray] = field(default_factory=dict)
    # Pairs filled in by inference rather than read from the printed table.
    inferred: set[tuple[str, str]] = field(default_factory=set)

    @property
    def n(self) -> int:
        return len(self.basis)

    def index(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise TableError(f"unknown basis element {name!r}") from None

    def vector(self, terms: dict[str, float | Fraction]) -> np.ndarray:
        v = np.zeros(self.n, dtype=object)
        v[:] = Fraction(0)
        for name, c in terms.items():
            v[self.index(name)] += Fraction(c)
        return v

    def set_bracket(self, x: str, y: str, terms: dict[str, Fraction], inferred: bool = False):
        i, j = self.index(x), self.index(y)
        v = self.vector(terms)
        if i == j:
            if any(c != 0 for c in v):
                raise TableError(f"[{x}, {x}] must vanish")
            self.brackets[(i, i)] = v
            return
        for key, val in (((i, j), v), ((j, i), -v)):
            old = self.brackets.get(key)
            if old is not None and not np.array_equal(old, val):
                raise TableError(f"conflicting entries for [{self.basis[key[0]]}, {self.basis[key[1]]}]")
            self.brackets[key] = val
        if inferred:
            self.inferred.add((x, y))

    def bracket_basis(self, i: int, j: int) -> np.ndarray:
        if i == j:
            return np.array([Fraction(0)] * self.n, dtype=object)
        try:
            return self.brackets[(i, j)]
        except KeyError:
            raise IncompleteTable((self.basis[i], self.basis[j])) from None

    def bracket(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Bilinear extension of the table to arbitrary coefficient vectors."""
        out = np.array([Fraction(0)] * self.n, dtype=object)
        for i in np.flatnonzero(u != 0):
            for j in np.flatnonzero(v != 0):
                out = out + u[i] * v[j] * self.bracket_basis(i, j)
        return out

    def missing_pairs(self) -> list[tuple[str, str]]:
        return [(self.basis[i], self.basis[j])
                for i, j in itertools.combinations(range(self.n), 2)
                if (i, j) not in self.brackets]

    def antisymmetric(self) -> bool:
        return all(np.array_equal(v, -self.brackets[(j, i)])
                   for (i, j), v in self.brackets.items() if (j, i) in self.brackets)

    def tensor(self) -> np.ndarray:
        """Float array ``f[i, j, k]`` with ``[e_i, e_j] = f[i, j, k] e_k``."""
        missing = self.missing_pairs()
        if missing:
            raise IncompleteTable(missing[0])
        f = np.zeros((self.n, self.n, self.n))
        for (i, j), v in self.brackets.items():
            f[i, j] = [float(c) for c in v]
        return f

    def to_text(self) -> str:
        lines = ["basis " + " ".join(self.basis)]
        for (i, j), v in sorted(self.brackets.items()):
            if i < j:
                lines.append(f"bracket {self.basis[i]} {self.basis[j]} = {format_vector(self.basis, v)}")
        return "\n".join(lines) + "\n"


def format_vector(basis: list[str], v) -> str:
    parts = []
    for name, c in zip(basis, v):
        if c == 0:
            continue
        parts.append(f"{c}*{name}")
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")


_TERM = re.compile(r"^\s*([+-]?)\s*(?:([0-9]+(?:/[0-9]+)?)\s*\*?\s*)?([A-Za-z_][A-Za-z_0-9]*)?\s*$")


def parse_linear(expr: str) -> dict[str, Fraction]:
    """Parse ``c1*e1 + c2*e2 - e3`` into ``{name: coefficient}``."""
    expr = expr.strip()
    if expr in ("", "0"):
        return {}
    chunks = re.findall(r"[+-]?[^+-]+", expr.replace(" ", ""))
    out: dict[str, Fraction] = {}
    for chunk in chunks:
        m = _TERM.match(chunk)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise TableError(f"cannot parse term {chunk!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3) is None:
            if coeff != 0:
                raise TableError(f"constant term {chunk!r} in a bracket")
            continue
        out[m.group(3)] = out.get(m.group(3), Fraction(0)) + sign * coeff
    return out


def parse_table(text: str) -> StructureConstants:
    basis: list[str] | None = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("basis "):
            basis = line.split()[1:]
            continue
        m = re.match(r"^bracket\s+(\S+)\s+(\S+)\s*=\s*(.*)$", line)
        if not m:
            raise TableError(f"line {lineno}: expected 'bracket x y = ...', got {raw!r}")
        entries.append((m.group(1), m.group(2), parse_linear(m.group(3)), lineno))
    if basis is None:
        basis = []
        for x, y, terms, _ in entries:
            for name in (x, y, *terms):
                if name not in basis:
                    basis.append(name)
    sc = StructureConstants(list(basis))
    for x, y, terms, lineno in entries:
        try:
            sc.set_bracket(x, y, terms)
        except TableError as exc:
            raise TableError(f"line {lineno}: {exc}") from None
    return sc


def jacobi_residual(sc: StructureConstants) -> float:
    """Max-norm of the Jacobiator over all basis triples (0 iff Lie)."""
    if not sc.antisymmetric():
        raise TableError("table is not antisymmetric")
    f = sc.tensor()
    # [[e_i, e_j], e_k] = f[i,j,l] f[l,k,:]
    first = np.einsum("ijl,lkm->ijkm", f, f)
    jac = first + first.transpose(1, 2, 0, 3) + first.transpose(2, 0, 1, 3)
    return float(np.abs(jac).max(initial=0.0))


def jacobi_violations(sc: StructureConstants, tol: float = 0.0) -> list[tuple[str, str, str, float]]:
    f = sc.tensor()
    first = np.einsum("ijl,lkm->ijkm", f, f)
    jac = first + first.transpose(1, 2, 0, 3) + first.transpose(2, 0, 1, 3)
    size = np.abs(jac).max(axis=3)
    out = []
    for i, j, k in zip(*np.nonzero(size > tol)):
        if i < j < k:
            out.append((sc.basis[i], sc.basis[j], sc.basis[k], float(size[i, j, k])))
    return out


# -- catalog tables -----------------------------------------------------------

SO21_TEXT = """\
basis K3 Kp Km
bracket K3 Kp = Kp
bracket K3 Km = -Km
bracket Kp Km = -2*K3
"""

SU2_TEXT = """\
basis J1 J2 J3
bracket J1 J2 = J3
bracket J2 J3 = J1
bracket J3 J1 = J2
"""


def so21_table() -> StructureConstants:
    return parse_table(SO21_TEXT)


def su2_table() -> StructureConstants:
    return parse_table(SU2_TEXT)


# -- the 12-generator table ------------------------------------------------------

TWELVE_BASIS = ["a1", "a2", "a3", "abar1", "abar2", "abar3",
                "b1", "b2", "b3", "bbar1", "bbar2", "bbar3"]


def _sector_brackets(i: int, j: int, k: int) -> list[tuple[str, str, str]]:
    """Printed brackets of the sector built on (a_i, a_j) with bosons b_k, bbar_k."""
    ai, aj, abi, abj = f"a{i}", f"a{j}", f"abar{i}", f"abar{j}"
    bk, bbk = f"b{k}", f"bbar{k}"
    return [
        (bk, ai, abi), (bk, aj, f"-{abj}"), (bk, abi, ai), (bk, abj, f"-{aj}"),
        (ai, aj, f"2*{bk}"), (abi, abj, f"2*{bk}"),
        (bbk, ai, ai), (bbk, aj, f"-{aj}"), (bbk, abi, abi), (bbk, abj, f"-{abj}"),
        (ai, abj, f"2*{bbk}"), (abi, aj, f"2*{bbk}"),
    ]


def twelve_dim_text() -> str:
    lines = ["basis " + " ".join(TWELVE_BASIS)]
    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        lines.append(f"# sector (a{i}, a{j}) with b{k}, bbar{k}")
        lines += [f"bracket {x} {y} = {z}" for x, y, z in _sector_brackets(i, j, k)]
    lines.append("# bosons commute with the fermions of their own index")
    for k in (1, 2, 3):
        for x, y in ((f"a{k}", f"b{k}"), (f"abar{k}", f"bbar{k}"),
                     (f"abar{k}", f"b{k}"), (f"a{k}", f"bbar{k}")):
            lines.append(f"bracket {x} {y} = 0")
    lines.append("# boson sector, with the cubic a3 b3 a3 terms cancelled")
    for i, j in ((1, 2), (2, 3), (3, 1)):
        same = f"-1/2*bbar{i} - 1/2*bbar{j}"
        cross = f"-1/2*b{i} - 1/2*b{j}"
        lines += [
            f"bracket b{i} b{j} = {same}",
            f"bracket bbar{i} bbar{j} = {same}",
            f"bracket bbar{i} b{j} = {cross}",
            f"bracket b{i} bbar{j} = {cross}",
        ]
    return "\n".join(lines) + "\n"


# Entries the printed table leaves implicit; filled in and listed separately.
INFERRED_TWELVE = (
    [(f"a{k}", f"abar{k}", "from a_k abar_k = abar_k a_k = 0") for k in (1, 2, 3)]
    + [(f"b{k}", f"bbar{k}", "b_k and bbar_k commute (stated for k=3, extended cyclically)")
       for k in (1, 2, 3)]
)


def twelve_dim_table(infer: bool = True) -> StructureConstants:
    sc = parse_table(twelve_dim_text())
    if infer:
        for x, y, _ in INFERRED_TWELVE:
            sc.set_bracket(x, y, {}, inferred=True)
    return sc


def b_sector_combinations(sc: StructureConstants) -> dict[str, np.ndarray]:
    """u/v combinations of the bosons exactly as printed (u+ and u- coincide)."""
    def v(**kw):
        return sc.vector({k: Fraction(c) for k, c in kw.items()})
    return {
        "u+": v(b3=1, bbar3=1, b1=1, bbar1=1),
        "u-": v(b3=1, bbar3=1, b1=1, bbar1=1),
        "u3": v(b3=1, bbar3=1),
        "v+": v(b3=1, bbar3=-1, b1=1, bbar1=-1),
        "v-": v(b3=1, bbar3=-1, b1=1, bbar1=-1),
        "v3": v(b3=1, bbar3=-1),
    }


def so21_residuals(bracket, three, plus, minus) -> dict[str, float]:
    """Residuals of [e3, +] = +, [e3, -] = -(-), [+, -] = -2 e3 under ``bracket``."""
    def size(x):
        return max((abs(float(c)) for c in np.ravel(x)), default=0.0)
    return {
        "[3,+]-(+)": size(bracket(three, plus) - plus),
        "[3,-]+(-)": size(bracket(three, minus) + minus),
        "[+,-]+2(3)": size(bracket(plus, minus) + 2 * three),
    }
