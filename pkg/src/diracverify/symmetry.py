"""Checks of the discrete-symmetry operator algebra, on operators and on fields."""
from __future__ import annotations

import itertools
from functools import lru_cache
from fractions import Fraction

import numpy as np

from .gamma import build_representation, hamiltonian_apply
from .numerics import Momentum
from .operators import HALF, QUARTER, AntilinearOp, anticommutator, commutator, compose, standard_ops
from .solutions import STATE_IDS, SolutionSet, build_chiral, build_solutions

# Printed action of T and T~ on the chirality/parity eigenstates: (from, to, sign).
T_TABLE = [("Psi+L", "Phi-R", -1), ("Psi-L", "Phi+R", 1), ("Psi+R", "Phi-L", -1), ("Psi-R", "Phi+L", 1)]
TT_TABLE = [("Psi+L", "Phi-R", 1), ("Psi-L", "Phi+R", 1), ("Psi+R", "Phi-L", -1), ("Psi-R", "Phi+L", -1)]
# C exchanges these pairs in both directions.
C_TABLE = [("Psi+L", "Phi-R"), ("Psi-L", "Phi+R"), ("Psi+R", "Phi-L"), ("Psi-R", "Phi+L")]


def hamiltonian_anticommutation(p: Momentum) -> dict[str, float]:
    """``(HC + CH) s`` for each solution, plus the energy of ``C s``."""
    rep = build_representation()
    C = standard_ops().C
    sols = build_solutions(p)
    out = {}
    for name, s in sols.items():
        hc = hamiltonian_apply(rep, C(s))
        ch = C(hamiltonian_apply(rep, s))
        out[f"(HC+CH){name}"] = (hc + ch).scale()
        flipped = -SolutionSet.energy_sign(name) * p.energy
        out[f"H(C{name})-({flipped:+.0f}E)"] = (hc - flipped * C(s)).scale()
    return out


def c_table_residuals(p: Momentum, pairing: str) -> dict[str, float]:
    C = standard_ops().C
    st = build_chiral(p, pairing).states
    out = {}
    for a, b in C_TABLE:
        out[f"{a}=C{b}"] = (st[a] - C(st[b])).norm()
        out[f"{b}=C{a}"] = (st[b] - C(st[a])).norm()
    return out


def chiral_swap_residuals(p: Momentum, pairing: str) -> dict[str, float]:
    C = standard_ops().C
    st = build_chiral(p, pairing)
    return {"XL=C XR": (st.XL - C(st.XR)).norm(), "XR=C XL": (st.XR - C(st.XL)).norm()}


def majorana_residual(p: Momentum, pairing: str, xs) -> float:
    C = standard_ops().C
    st = build_chiral(p, pairing)
    return (C(st.majorana) - st.majorana).max_over(xs)


def spinor_action_residuals(p: Momentum) -> dict[str, float]:
    """Printed action of T and T~ on the plane-wave solutions."""
    ops = standard_ops()
    rep = build_representation()
    sols = build_solutions(p)
    g5, P = rep.float_gamma5, rep.float_parity
    return {
        "T phi1 = g5 psi1": (ops.T(sols.phi1) - sols.psi1.apply(g5)).norm(),
        "T~ phi1 = P psi1": (ops.Tt(sols.phi1) - sols.psi1.apply(P)).norm(),
        "T phi2 = i P psi2": (ops.T(sols.phi2) - 1j * sols.psi2.apply(P)).norm(),
        "T~ phi2 = i g5 P psi2": (ops.Tt(sols.phi2) - 1j * sols.psi2.apply(g5 @ P)).norm(),
    }


def eigenstate_action_residuals(p: Momentum, pairing: str) -> dict[str, float]:
    ops = standard_ops()
    st = build_chiral(p, pairing).states
    out = {}
    for label, op, table in (("T", ops.T, T_TABLE), ("T~", ops.Tt, TT_TABLE)):
        for a, b, sign in table:
            out[f"{label} {a} = {'+' if sign > 0 else '-'}{b}"] = (op(st[a]) - sign * st[b]).norm()
    return out


# -- fixed points of the real action ---------------------------------------------

def _realify(fields) -> np.ndarray:
    cols = []
    for f in fields:
        v = np.concatenate([f.terms.get(n, np.zeros(4, complex)) for n in (-1, 1)])
        cols.append(np.concatenate([v.real, v.imag]))
    return np.array(cols).T


def real_action_matrix(op: AntilinearOp, states: dict, norm_floor: float = 1e-12):
    """Real matrix of ``op`` on the real span of the nonzero states.

    Returns ``(names, M, closure_residual)`` where ``op(s_a) = sum_b M[b, a] s_b``.
    """
    names = [n for n in STATE_IDS if states[n].norm() > norm_floor]
    basis = _realify([states[n] for n in names])
    image = _realify([op(states[n]) for n in names])
    M, *_ = np.linalg.lstsq(basis, image, rcond=None)
    closure = float(np.abs(basis @ M - image).max(initial=0.0))
    return names, M, closure


def fixed_space_dimension(M: np.ndarray, tol: float = 1e-9) -> int:
    """Dimension of ker(M - 1)."""
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return 0
    sv = np.linalg.svd(M - np.eye(M.shape[0]), compute_uv=False)
    return int(np.sum(sv <= tol * max(1.0, sv.max(initial=0.0))))


def fixed_point_analysis(p: Momentum, pairing: str = "1") -> dict:
    ops = standard_ops()
    st = build_chiral(p, pairing).states
    out = {}
    for label, op in (("T", ops.T), ("T~", ops.Tt)):
        names, M, closure = real_action_matrix(op, st)
        entry = {"states": names, "closure": closure}
        if closure <= 1e-9:
            entry["fixed_dim"] = fixed_space_dimension(M)
            entry["matrix"] = np.round(M, 12).tolist()
        else:
            entry["fixed_dim"] = None
        out[label] = entry
    return out


# -- operator identities ---------------------------------------------------------

@lru_cache(maxsize=1)
def cpt_products() -> dict[str, AntilinearOp]:
    """All orderings of C, P, T and of C, P, T~."""
    ops = standard_ops()
    named = {"C": ops.C, "P": ops.P, "T": ops.T, "T~": ops.Tt}
    out = {}
    for last in ("T", "T~"):
        for order in itertools.permutations(("C", "P", last)):
            out["".join(order)] = compose(*(named[k] for k in order))
    return out


def split_quaternion_subsets() -> dict[str, tuple[AntilinearOp, AntilinearOp, AntilinearOp]]:
    o = standard_ops()
    return {
        "{1, g5C, C, g5}": (o.g5C, o.C, o.g5),
        "{1, g5C, -P, g5PC}": (o.g5C, -o.P, o.g5PC),
        "{1, PC, C, P}": (o.PC, o.C, o.P),
        "{1, PC, g5PC, g5}": (o.PC, o.g5PC, o.g5),
    }


def split_quaternion_residuals(e1: AntilinearOp, e2: AntilinearOp, e3: AntilinearOp) -> dict[str, float]:
    one = AntilinearOp.identity()
    return {
        "e1^2=-1": (e1 @ e1).residual(-one),
        "e2^2=1": (e2 @ e2).residual(one),
        "e3^2=1": (e3 @ e3).residual(one),
        "e1e2=e3": (e1 @ e2).residual(e3),
        "e2e1=-e3": (e2 @ e1).residual(-e3),
    }


def so21_operator_residuals(three: AntilinearOp, plus: AntilinearOp, minus: AntilinearOp) -> dict[str, float]:
    return {
        "[3,+]=+": commutator(three, plus).residual(plus),
        "[3,-]=-(-)": commutator(three, minus).residual(-minus),
        "[+,-]=-2(3)": commutator(plus, minus).residual(Fraction(-2) * three),
    }


def k_basis(e1, e2, e3):
    return HALF * e3, HALF * (e1 + e2), HALF * (e1 - e2)


def uv_sets() -> dict[str, tuple[AntilinearOp, AntilinearOp, AntilinearOp]]:
    """(third, plus, minus) for the u and v sets built from P, gamma5, C."""
    o = standard_ops()
    PC, C, g5C, g5PC = o.PC, o.C, o.g5C, o.g5PC
    return {
        "u": (QUARTER * (o.P + o.g5),
              QUARTER * (PC + C + g5C + g5PC),
              QUARTER * (PC - C + g5C - g5PC)),
        "v": (QUARTER * (o.P - o.g5),
              QUARTER * (PC + C - g5C - g5PC),
              QUARTER * (PC - C - g5C + g5PC)),
    }


def fermionic_operators() -> dict[str, AntilinearOp]:
    o = standard_ops()
    return {
        "a1": HALF * (o.g5 - o.PC),
        "a2": HALF * (o.P + o.g5C),
        "b3": HALF * o.C,
        "abar1": HALF * (o.P - o.g5C),
        "abar2": HALF * (o.g5 + o.PC),
        "bbar3": HALF * o.g5PC,
    }


# Printed brackets among the six concrete generators: (x, y, coefficient, z).
FERMION_BRACKETS = [
    ("b3", "a1", 1, "abar1"), ("b3", "a2", -1, "abar2"), ("b3", "abar1", 1, "a1"),
    ("b3", "abar2", -1, "a2"), ("a1", "a2", 2, "b3"), ("abar1", "abar2", 2, "b3"),
    ("bbar3", "a1", 1, "a1"), ("bbar3", "a2", -1, "a2"), ("bbar3", "abar1", 1, "abar1"),
    ("bbar3", "abar2", -1, "abar2"), ("a1", "abar2", 2, "bbar3"), ("abar1", "a2", 2, "bbar3"),
]


@lru_cache(maxsize=1)
def fermionic_sector_residuals() -> dict[str, float]:
    f = fermionic_operators()
    zero = AntilinearOp.zero()
    a1, a2, ab1, ab2, b3, bb3 = (f[k] for k in ("a1", "a2", "abar1", "abar2", "b3", "bbar3"))
    out = {}
    for x, y in (("a1", "a1"), ("abar1", "abar1"), ("a1", "abar1"), ("abar1", "a1"),
                 ("a2", "a2"), ("abar2", "abar2"), ("a2", "abar2"), ("abar2", "a2")):
        out[f"{x}{y}=0"] = (f[x] @ f[y]).residual(zero)
    out["b3=[a1,a2]/2"] = (HALF * commutator(a1, a2)).residual(b3)
    out["b3=[abar1,abar2]/2"] = (HALF * commutator(ab1, ab2)).residual(b3)
    out["bbar3=[a1,abar2]/2"] = (HALF * commutator(a1, ab2)).residual(bb3)
    out["bbar3=[abar1,a2]/2"] = (HALF * commutator(ab1, a2)).residual(bb3)
    for x, y, c, z in FERMION_BRACKETS:
        out[f"[{x},{y}]={c}{z}"] = commutator(f[x], f[y]).residual(Fraction(c) * f[z])
    products = {
        "a1 abar2 = abar1 a2": (a1 @ ab2, ab1 @ a2),
        "a2 abar1 = abar2 a1": (a2 @ ab1, ab2 @ a1),
        "a1 a2 a1 = abar1": (a1 @ a2 @ a1, ab1),
        "a2 a1 a2 = abar2": (a2 @ a1 @ a2, ab2),
        "abar1 a2 a1 = a1": (ab1 @ a2 @ a1, a1),
        "abar2 a1 a2 = a2": (ab2 @ a1 @ a2, a2),
        "abar1 abar2 a1 = abar1": (ab1 @ ab2 @ a1, ab1),
        "abar2 abar1 a2 = abar2": (ab2 @ ab1 @ a2, ab2),
        "abar1 abar2 abar1 = a1": (ab1 @ ab2 @ ab1, a1),
        "abar2 abar1 abar2 = a2": (ab2 @ ab1 @ ab2, a2),
    }
    for name, (lhs, rhs) in products.items():
        out[name] = lhs.residual(rhs)
    return out


def nilpotent_anticommutators() -> dict[str, float]:
    """Anticommutators among P +- g5 C and g5 +- PC, as max-entry sizes."""
    o = standard_ops()
    ops = {"P+g5C": o.P + o.g5C, "P-g5C": o.P - o.g5C, "g5+PC": o.g5 + o.PC, "g5-PC": o.g5 - o.PC}
    zero = AntilinearOp.zero()
    out = {f"({k})^2": (v @ v).residual(zero) for k, v in ops.items()}
    for (ka, a), (kb, b) in itertools.combinations(ops.items(), 2):
        out[f"{{{ka},{kb}}}"] = anticommutator(a, b).residual(zero)
    return out
