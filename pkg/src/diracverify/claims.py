"""Claim registry, run configuration and the deterministic verification harness."""
from __future__ import annotations

import fnmatch
import itertools
import json
import math
import os
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import bosons, lie, symmetry
from .currents import census_64, current_field, superposition_divergence
from .gamma import (build_representation, clifford_residual, dirac_operator_apply, helicity_operator,
                    sigma, slash_apply)
from .numerics import Momentum, exact_matrix, max_abs, scale
from .operators import AntilinearOp, commutator, standard_ops
from .results import FAIL, FINDING, PASS, ClaimResult, judge, merge
from .solutions import (PAIRINGS, SOLUTION_IDS, build_chiral, build_solutions, eigen_residual,
                        helicity_residuals, solution_amplitudes)
from .wavefields import WaveSum, divergence, sandwich

REPORT_VERSION = "1"
DEFAULT_SEED = 42
CONSERVED_PAIRINGS = ("1", "2")


class ConfigError(ValueError):
    pass


class UnknownClaim(KeyError):
    pass


# -- configuration -----------------------------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    masses: tuple[float, ...] = (0.5, 1.0, 2.0)
    momenta: tuple[tuple[float, float, float], ...] | None = None
    random_momenta: int = 4
    momentum_bound: float = 3.0
    samples: int = 20
    x_bound: float = 5.0
    seed: int | None = None
    tol: float = 1e-9

    def resolved_seed(self) -> int:
        if self.seed is not None:
            return int(self.seed)
        env = os.environ.get("VERIFY_SEED")
        if env is None or env.strip() == "":
            return DEFAULT_SEED
        try:
            return int(env)
        except ValueError:
            raise ConfigError(f"VERIFY_SEED must be an integer, got {env!r}") from None

    def validate(self) -> None:
        if not self.masses:
            raise ConfigError("at least one mass is required")
        for m in self.masses:
            if not (math.isfinite(m) and m > 0):
                raise ConfigError(f"masses must be finite and > 0, got {m}")
        if self.momenta is not None:
            if not self.momenta:
                raise ConfigError("explicit momentum list is empty")
            for p in self.momenta:
                if len(p) != 3 or not all(math.isfinite(c) for c in p):
                    raise ConfigError(f"momentum must be three finite numbers, got {p}")
        elif self.random_momenta < 1:
            raise ConfigError("random_momenta must be at least 1")
        if self.samples < 1:
            raise ConfigError("samples must be at least 1")
        for name in ("momentum_bound", "x_bound", "tol"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ConfigError(f"{name} must be finite and > 0, got {v}")
        seed = self.resolved_seed()
        if not 0 <= seed < 2 ** 64:
            raise ConfigError("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class Context:
    """Everything an evaluator may look at: the config and the drawn inputs."""
    config: RunConfig
    seed: int
    vectors: tuple[tuple[float, float, float], ...]
    xs: np.ndarray

    @property
    def tol(self) -> float:
        return self.config.tol

    @property
    def momenta(self) -> list[Momentum]:
        return [Momentum(m, v) for m in self.config.masses for v in self.vectors]

    @classmethod
    def from_config(cls, config: RunConfig) -> "Context":
        config.validate()
        seed = config.resolved_seed()
        rng = np.random.default_rng(seed)
        if config.momenta is not None:
            vectors = tuple(tuple(float(c) for c in p) for p in config.momenta)
        else:
            b = config.momentum_bound
            vectors = tuple(tuple(float(c) for c in row)
                            for row in rng.uniform(-b, b, size=(config.random_momenta, 3)))
        xs = rng.uniform(-config.x_bound, config.x_bound, size=(config.samples, 4))
        return cls(config, seed, vectors, xs)

    def describe(self) -> dict:
        cfg = asdict(self.config)
        cfg["masses"] = [float(m) for m in self.config.masses]
        cfg["momenta"] = None if self.config.momenta is None else [list(v) for v in self.vectors]
        cfg["seed"] = self.seed
        cfg["drawn_momenta"] = [list(v) for v in self.vectors]
        cfg["drawn_x"] = self.xs.tolist()
        return cfg


# -- registry ----------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    id: str
    section: str
    anchor: str
    kind: str
    formula: str
    evaluator: Callable = field(repr=False)
    per_momentum: bool = True
    expected: str | None = None


REGISTRY: dict[str, Claim] = {}


def claim(cid: str, section: str, anchor: str, kind: str, formula: str, *,
          per_momentum: bool = True, expected: str | None = None):
    def deco(fn):
        if cid in REGISTRY:
            raise ValueError(f"duplicate claim id {cid}")
        REGISTRY[cid] = Claim(cid, section, anchor, kind, formula, fn, per_momentum, expected)
        return fn
    return deco


def _rel(num: float, den: float) -> float:
    return num / den if den > 0 else num


def _f(x) -> float:
    return float(x)


# ---- representation ----

@claim("CL-101", "representation", "we define a new one", "exact",
       "{g^mu, g^nu} = 2 g^{mu nu} I for all 16 index pairs", per_momentum=False)
def _cl101(ctx):
    return judge("CL-101", {"clifford": _f(clifford_residual(build_representation()))}, 0, kind="exact")


@claim("CL-102", "representation", "chirality operator", "exact",
       "gamma5 = i g0 g1 g2 g3 = diag(1, -1, -1, 1)", per_momentum=False)
def _cl102(ctx):
    rep = build_representation()
    printed = exact_matrix(np.diag([1, -1, -1, 1]).tolist())
    return judge("CL-102", {"gamma5": max_abs(rep.gamma5 - printed)}, 0, kind="exact")


@claim("CL-103", "representation", "parity operator", "exact",
       "P = -i g1 g2 = diag(1, 1, -1, -1)", per_momentum=False)
def _cl103(ctx):
    rep = build_representation()
    printed = exact_matrix(np.diag([1, 1, -1, -1]).tolist())
    return judge("CL-103", {"P": max_abs(rep.parity - printed)}, 0, kind="exact")


@claim("CL-104", "representation", "parity operator", "exact",
       "[gamma5, P] = 0, gamma5^2 = P^2 = 1", per_momentum=False)
def _cl104(ctx):
    o = standard_ops()
    one = o.one
    return judge("CL-104", {
        "[g5,P]": commutator(o.g5, o.P).residual(AntilinearOp.zero()),
        "g5^2-1": (o.g5 @ o.g5).residual(one),
        "P^2-1": (o.P @ o.P).residual(one),
    }, 0, kind="exact")


@claim("CL-105", "representation", "we define a new one", "exact",
       "g0, gamma5, P Hermitian; g1, g2, g3 anti-Hermitian", per_momentum=False)
def _cl105(ctx):
    want = {"gamma0": "hermitian", "gamma1": "anti-hermitian", "gamma2": "anti-hermitian",
            "gamma3": "anti-hermitian", "gamma5": "hermitian", "parity": "hermitian"}
    got = build_representation().hermiticity()
    return judge("CL-105", {k: float(got[k] != v) for k, v in want.items()}, 0, kind="exact",
                 notes=json.dumps(got, sort_keys=True))


@claim("CL-106", "representation", "of positive energy", "float",
       "|H phi_i - E phi_i| / E")
def _cl106(p, ctx):
    rep, sols = build_representation(), build_solutions(p)
    return judge("CL-106", {n: eigen_residual(rep, sols, n) / p.energy for n in ("phi1", "phi2")}, ctx.tol)


@claim("CL-107", "representation", "of negative energy", "float",
       "|H psi_i + E psi_i| / E")
def _cl107(p, ctx):
    rep, sols = build_representation(), build_solutions(p)
    return judge("CL-107", {n: eigen_residual(rep, sols, n) / p.energy for n in ("psi1", "psi2")}, ctx.tol)


@claim("CL-108", "representation", "plane wave solutions in this representation", "float",
       "|(i g.d - m) s| / m for the four solutions")
def _cl108(p, ctx):
    rep, sols = build_representation(), build_solutions(p, check=False)
    return judge("CL-108", {n: dirac_operator_apply(rep, s).scale() / p.m for n, s in sols.items()}, ctx.tol)


@claim("CL-109", "representation", "plane wave solutions in this representation", "float",
       "|u^dagger u - 1| for the printed amplitudes (tolerance 1e-12)")
def _cl109(p, ctx):
    amps = solution_amplitudes(p)
    return judge("CL-109", {n: abs(np.vdot(a, a).real - 1) for n, a in amps.items()}, 1e-12)


# ---- chirality, parity and C ----

@claim("CL-201", "symmetries", "is the complex conjugation operator", "exact",
       "C^2 = 1 with C = (matrix, conjugation)", per_momentum=False)
def _cl201(ctx):
    o = standard_ops()
    return judge("CL-201", {"C^2-1": (o.C @ o.C).residual(o.one)}, 0, kind="exact")


@claim("CL-202", "symmetries", "anticommutes with the Hamiltonian", "float",
       "|(HC + CH) s| / E for the four solutions")
def _cl202(p, ctx):
    r = symmetry.hamiltonian_anticommutation(p)
    return judge("CL-202", {k: v / p.energy for k, v in r.items() if k.startswith("(HC+CH)")}, ctx.tol)


@claim("CL-203", "symmetries", "is a negative (positive) solution", "float",
       "C s is an H eigenfield with the opposite energy, residual / E")
def _cl203(p, ctx):
    r = symmetry.hamiltonian_anticommutation(p)
    return judge("CL-203", {k: v / p.energy for k, v in r.items() if k.startswith("H(C")}, ctx.tol)


def _norm_of(st) -> float:
    return max(st.majorana.norm(), 1e-300)


@claim("CL-204", "symmetries", "eight common eigenstates of chirality", "float",
       "C-mapping table between the eight eigenstates, pairing (phi1, psi1), relative to |psi+phi|")
def _cl204(p, ctx):
    st = build_chiral(p, "1")
    r = symmetry.c_table_residuals(p, "1")
    return judge("CL-204", {k: v / _norm_of(st) for k, v in r.items()}, ctx.tol,
                 notes="states follow the printed naming: projections of phi are called Psi")


@claim("CL-205", "symmetries", "eight common eigenstates of chirality", "finding",
       "C-mapping table for pairings (phi2, psi2) and the summed pairing", expected="0 for every entry")
def _cl205(p, ctx):
    details = {}
    for pairing in ("2", "sum"):
        st = build_chiral(p, pairing)
        for k, v in symmetry.c_table_residuals(p, pairing).items():
            details[f"{pairing}:{k}"] = v / _norm_of(st)
    return judge("CL-205", details, ctx.tol, kind="finding", expected=0.0)


@claim("CL-206", "symmetries", "by superposition", "float",
       "X_L + X_R = psi + phi, gamma5 X_L = -X_L, gamma5 X_R = X_R, all pairings")
def _cl206(p, ctx):
    g5 = build_representation().float_gamma5
    details = {}
    for pairing in PAIRINGS:
        st = build_chiral(p, pairing)
        n = _norm_of(st)
        details[f"{pairing}:XL+XR"] = (st.XL + st.XR - st.majorana).scale() / n
        details[f"{pairing}:g5XL"] = (st.XL.apply(g5) + st.XL).scale() / n
        details[f"{pairing}:g5XR"] = (st.XR.apply(g5) - st.XR).scale() / n
    return judge("CL-206", details, ctx.tol)


def _bar(x: WaveSum, y: WaveSum) -> WaveSum:
    return sandwich(x.conj(), build_representation().float_gamma[0], y)


@claim("CL-207", "symmetries", "which form an orthogonal set", "float",
       "Xbar_L X_L = Xbar_R X_R = Xbar_L X_R = Xbar_R X_L = 0 as fields, all pairings")
def _cl207(p, ctx):
    details = {}
    for pairing in PAIRINGS:
        st = build_chiral(p, pairing)
        for a, b in itertools.product(("L", "R"), repeat=2):
            x, y = getattr(st, "X" + a), getattr(st, "X" + b)
            details[f"{pairing}:X{a}bar X{b}"] = _bar(x, y).scale()
    return judge("CL-207", details, ctx.tol,
                 notes="for the summed pairing Xbar_L X_R equals Xbar P_R X, which is not zero")


@claim("CL-208", "symmetries", "satisfy Proca equation", "float",
       "(box + m^2) X_{L,R} = 0, residual / m, all pairings")
def _cl208(p, ctx):
    details = {}
    for pairing in PAIRINGS:
        st = build_chiral(p, pairing)
        for ch in "LR":
            x = getattr(st, "X" + ch)
            details[f"{pairing}:X{ch}"] = (x.box() + p.m ** 2 * x).scale() / p.m
    return judge("CL-208", details, ctx.tol)


@claim("CL-209", "symmetries", "partial differential coupled equations", "float",
       "i g.d X_L = m X_R and i g.d X_R = m X_L, residual / m, all pairings")
def _cl209(p, ctx):
    rep = build_representation()
    details = {}
    for pairing in PAIRINGS:
        st = build_chiral(p, pairing)
        details[f"{pairing}:L"] = (slash_apply(rep, st.XL) - p.m * st.XR).scale() / p.m
        details[f"{pairing}:R"] = (slash_apply(rep, st.XR) - p.m * st.XL).scale() / p.m
    return judge("CL-209", details, ctx.tol)


@claim("CL-210", "symmetries", "therefore it is a Majorana particle", "finding",
       "max over x of |C(psi + phi) - (psi + phi)|, per pairing", expected="0 for every pairing")
def _cl210(p, ctx):
    details = {pr: symmetry.majorana_residual(p, pr, ctx.xs) for pr in PAIRINGS}
    return judge("CL-210", details, ctx.tol, kind="finding", expected=0.0)


@claim("CL-211", "symmetries", "transformed one into another", "finding",
       "X_L = C X_R and X_R = C X_L, per pairing, relative to |psi+phi|", expected="0 for every pairing")
def _cl211(p, ctx):
    details = {}
    for pairing in PAIRINGS:
        n = _norm_of(build_chiral(p, pairing))
        for k, v in symmetry.chiral_swap_residuals(p, pairing).items():
            details[f"{pairing}:{k}"] = v / n
    return judge("CL-211", details, ctx.tol, kind="finding", expected=0.0)


# ---- currents ----

def _chiral_currents(p: Momentum, pairing: str, k: int = 0):
    st = build_chiral(p, pairing)
    return {ch: current_field(getattr(st, "X" + ch), getattr(st, "X" + ch), k) for ch in "LR"}


@claim("CL-301", "currents", "left and right conserved four-currents", "float",
       "d.j(X_L, X_L) = d.j(X_R, X_R) = 0 relative to the scale of j, pairings 1 and 2")
def _cl301(p, ctx):
    details = {}
    for pairing in CONSERVED_PAIRINGS:
        for ch, j in _chiral_currents(p, pairing).items():
            details[f"{pairing}:{ch}"] = _rel(divergence(j).scale(), j.scale())
    return judge("CL-301", details, ctx.tol,
                 notes="the summed pairing is reported separately under CL-306")


@claim("CL-302", "currents", "which are equal and real defined", "float",
       "j(X, X) equals its own conjugate as a field (tolerance 1e-12), all pairings")
def _cl302(p, ctx):
    details = {}
    for pairing in PAIRINGS:
        for ch, j in _chiral_currents(p, pairing).items():
            details[f"{pairing}:{ch}"] = (j - j.conj()).scale()
    return judge("CL-302", details, 1e-12)


@claim("CL-303", "currents", "which are equal and real defined", "float",
       "j(X_L, X_L) = j(X_R, X_R) relative to scale, pairings 1 and 2")
def _cl303(p, ctx):
    details = {}
    for pairing in CONSERVED_PAIRINGS:
        j = _chiral_currents(p, pairing)
        details[pairing] = _rel((j["L"] - j["R"]).scale(), j["L"].scale())
    return judge("CL-303", details, ctx.tol)


@claim("CL-304", "currents", "the zero current between eigenstates", "float",
       "j(X_L, X_R) = j(X_R, X_L) = 0, all pairings")
def _cl304(p, ctx):
    details = {}
    for pairing in PAIRINGS:
        st = build_chiral(p, pairing)
        details[f"{pairing}:LR"] = current_field(st.XL, st.XR).scale()
        details[f"{pairing}:RL"] = current_field(st.XR, st.XL).scale()
    return judge("CL-304", details, ctx.tol)


@claim("CL-305", "currents", "conserved currents with first order derivatives", "float",
       "d.j_(1)(X, X) = 0 for both chiralities, relative to scale, pairings 1 and 2")
def _cl305(p, ctx):
    details = {}
    for pairing in CONSERVED_PAIRINGS:
        for ch, j in _chiral_currents(p, pairing, 1).items():
            details[f"{pairing}:{ch}"] = _rel(divergence(j).scale(), j.scale())
    return judge("CL-305", details, ctx.tol)


@claim("CL-306", "currents", "left and right conserved four-currents", "finding",
       "conservation and L/R equality of j, j_(1) for the summed pairing", expected="0 for every entry")
def _cl306(p, ctx):
    details = {}
    for k in (0, 1):
        j = _chiral_currents(p, "sum", k)
        for ch in "LR":
            details[f"d.j_({k})({ch})"] = _rel(divergence(j[ch]).scale(), j[ch].scale())
        details[f"j_({k})(L)-j_({k})(R)"] = _rel((j["L"] - j["R"]).scale(), j["L"].scale())
    return judge("CL-306", details, ctx.tol, kind="finding", expected=0.0)


@claim("CL-307", "currents", "Out of 64 currents between all", "float",
       "number of identically zero currents among the 64 eigenstate pairs is 32 (summed pairing)")
def _cl307(p, ctx):
    table = census_64(p, "sum", ctx.xs)
    zeros = sum(e.zero for e in table)
    counts = {pr: sum(e.zero for e in census_64(p, pr, ctx.xs)) for pr in ("1", "2")}
    return judge("CL-307", {"|zeros-32|": abs(zeros - 32)}, 0,
                 notes=f"zero currents: summed pairing {zeros}, pairing 1 {counts['1']}, pairing 2 {counts['2']}")


@claim("CL-308", "currents", "but are not conserved", "float",
       "every nonzero census current has max|d.j| > 1e-3 scale at some sampled momentum; "
       "residual = number that never do", per_momentum=False)
def _cl308(ctx):
    ever: dict[tuple[str, str], bool] = {}
    degenerate: dict[tuple[str, str], int] = {}
    for p in ctx.momenta:
        for e in census_64(p, "sum", ctx.xs):
            if e.zero:
                continue
            key = (e.left, e.right)
            broken = e.max_divergence > 1e-3 * e.scale
            ever[key] = ever.get(key, False) or broken
            if not broken:
                degenerate[key] = degenerate.get(key, 0) + 1
    never = sorted(k for k, v in ever.items() if not v)
    notes = (f"{len(ever)} nonzero currents; {len(never)} conserved at every sampled momentum: "
             + ", ".join(f"{a}|{b}" for a, b in never))
    return judge("CL-308", {"never_violated": float(len(never))}, 0, notes=notes)


@claim("CL-309", "currents", "are are not conserved", "float",
       "the unit sum of all same-parity eigenstates gives max|d.j| > 1e-3 scale at some momentum; "
       "residual = parities for which it never does", per_momentum=False)
def _cl309(ctx):
    worst = {"+": 0.0, "-": 0.0}
    for p in ctx.momenta:
        for parity in worst:
            div, sc = superposition_divergence(p, parity, "sum", ctx.xs)
            worst[parity] = max(worst[parity], _rel(div, sc))
    never = [k for k, v in worst.items() if v <= 1e-3]
    return judge("CL-309", {"never_violated": float(len(never))}, 0,
                 notes="max relative divergence: " + json.dumps(worst, sort_keys=True))


# ---- helicity ----

@claim("CL-401", "helicity", "helicity operator is given by", "exact",
       "along z: h = S^3 = Sigma^12 = -P/2 exactly", per_momentum=False)
def _cl401(ctx):
    rep = build_representation()
    target = scale(Fraction(-1, 2), rep.parity)
    h_float = helicity_operator(rep, Momentum(1, (0, 0, 2)))
    return judge("CL-401", {
        "Sigma12+P/2": max_abs(sigma(rep, 1, 2) - target),
        "h(0,0,p3)+P/2": float(np.abs(h_float - rep.float_parity * -0.5).max()),
    }, 0, kind="exact")


@claim("CL-402", "helicity", "Helicity commutes with parity and chirality", "float",
       "[h(p), gamma5] = 0 at the sampled momenta")
def _cl402(p, ctx):
    rep = build_representation()
    h, g5 = helicity_operator(rep, p), rep.float_gamma5
    return judge("CL-402", {"[h,g5]": float(np.abs(h @ g5 - g5 @ h).max())}, ctx.tol)


@claim("CL-403", "helicity", "Helicity commutes with parity and chirality", "finding",
       "[h(p), P] at the sampled momenta", expected="0")
def _cl403(p, ctx):
    rep = build_representation()
    h, P = helicity_operator(rep, p), rep.float_parity
    return judge("CL-403", {"[h,P]": float(np.abs(h @ P - P @ h).max())}, ctx.tol, kind="finding",
                 expected=0.0, notes="commutes with P only when the momentum lies along z")


@claim("CL-404", "helicity", "helicity operator is given by", "float",
       "eigenvalues of h(p) are -1/2, -1/2, +1/2, +1/2")
def _cl404(p, ctx):
    h = helicity_operator(build_representation(), p)
    ev = np.sort(np.linalg.eigvalsh(h))
    return judge("CL-404", {"eig": float(np.abs(ev - [-0.5, -0.5, 0.5, 0.5]).max())}, ctx.tol)


def helicity_ladder(m: float, pairing: str, ratios=(10.0, 20.0, 40.0)):
    """(r_L, r_R) at p = (0, 0, p3) with E/m running over ``ratios``."""
    out = []
    for k in ratios:
        p3 = m * math.sqrt(k * k - 1)
        out.append(helicity_residuals(Momentum(m, (0.0, 0.0, p3)), pairing))
    return out


@claim("CL-405", "helicity", "get correct predictions", "float",
       "r(2E)/r(E) for |h X_L + X_L/2|/|X_L| and |h X_R - X_R/2|/|X_R|, two doublings from E/m = 10; "
       "tolerance 0.6", per_momentum=False)
def _cl405(ctx):
    details = {}
    for m in ctx.config.masses:
        for pairing in PAIRINGS:
            ladder = helicity_ladder(m, pairing)
            for step in range(len(ladder) - 1):
                for side, idx in (("L", 0), ("R", 1)):
                    a, b = ladder[step][idx], ladder[step + 1][idx]
                    details[f"m={m}:{pairing}:{side}:{step}"] = _rel(b, a)
    return judge("CL-405", details, 0.6)


# ---- derivative currents and boson fields ----

@claim("CL-501", "bosons", "are independent, all other currents", "float",
       "j_(2) = m^4 j and j_(3) = m^4 j_(1), residual / (m^4 scale), all pairings")
def _cl501(p, ctx):
    details = {}
    m4 = p.m ** 4
    for pairing in PAIRINGS:
        st = build_chiral(p, pairing)
        for ch in "LR":
            x = getattr(st, "X" + ch)
            j0, j1, j2, j3 = (current_field(x, x, k) for k in range(4))
            details[f"{pairing}:{ch}:j2"] = _rel((j2 - m4 * j0).scale(), m4 * j0.scale())
            details[f"{pairing}:{ch}:j3"] = _rel((j3 - m4 * j1).scale(), m4 * max(j1.scale(), j0.scale()))
    return judge("CL-501", details, ctx.tol)


def box_relation_residuals(x: WaveSum) -> dict[str, float]:
    """box j = -2m^2 j + 2 j_(1) and box j_(1) = -2m^2 j_(1) + 2m^4 j, relative to scale."""
    m2 = x.momentum.m ** 2
    j0, j1 = current_field(x, x, 0), current_field(x, x, 1)
    s = max(j0.scale(), j1.scale() / m2) * max(1.0, m2 * m2)
    return {
        "box j": _rel((j0.box() + 2 * m2 * j0 - 2 * j1).scale(), s),
        "box j1": _rel((j1.box() + 2 * m2 * j1 - 2 * m2 * m2 * j0).scale(), s),
    }


@claim("CL-502", "bosons", "coupled second order differential equations", "float",
       "box j = -2m^2 j + 2 j_(1), box j_(1) = -2m^2 j_(1) + 2m^4 j, relative to scale, all pairings")
def _cl502(p, ctx):
    details = {}
    for pairing in PAIRINGS:
        st = build_chiral(p, pairing)
        for ch in "LR":
            for k, v in box_relation_residuals(getattr(st, "X" + ch)).items():
                details[f"{pairing}:{ch}:{k}"] = v
    return judge("CL-502", details, ctx.tol)


@claim("CL-503", "bosons", "unifies Dirac and Proca equations", "float",
       "S2^a d_a S1^b = S1^a d_a S2^b = 0, residual / (m^2 E)")
def _cl503(p, ctx):
    r = bosons.entangled_residuals(p)
    return judge("CL-503", {k: v / (p.m ** 2 * p.energy) for k, v in r.items()}, ctx.tol)


def _potentials(p: Momentum, kind: str):
    for src in SOLUTION_IDS:
        for ch in "LR":
            yield src, ch, bosons.build_potential(kind, ch, src, p)


@claim("CL-504", "bosons", "Proca equation for a particle", "float",
       "(box + 4m^2) A = 0 and d.A = 0 for the four sources, both chiralities, relative to scale")
def _cl504(p, ctx):
    details = {}
    for src, ch, v in _potentials(p, "A"):
        sc = v.components.scale() * max(1.0, 4 * p.m ** 2, p.energy)
        for k, r in bosons.field_equation_residuals(v).items():
            details[f"{src}:{ch}:{k}"] = _rel(r, sc)
    return judge("CL-504", details, ctx.tol)


@claim("CL-505", "bosons", "satisfy Maxwell equations", "float",
       "box B = 0 and d.B = 0 for the four sources, both chiralities, relative to scale")
def _cl505(p, ctx):
    details = {}
    for src, ch, v in _potentials(p, "B"):
        sc = v.components.scale() * max(1.0, p.energy)
        for k, r in bosons.field_equation_residuals(v).items():
            details[f"{src}:{ch}:{k}"] = _rel(r, sc)
    return judge("CL-505", details, ctx.tol)


@claim("CL-506", "bosons", "all are constant in spacetime", "float",
       "B^a = p^a / E componentwise for all four solutions (the printed list repeats phi2)")
def _cl506(p, ctx):
    expected = bosons.b_expected(p)
    details = {f"{src}:{ch}": (v.components - expected).scale() for src, ch, v in _potentials(p, "B")}
    return judge("CL-506", details, ctx.tol)


@claim("CL-507", "bosons", "orthogonality to the four-momentum", "float",
       "p.S1 = p.S2 = 0 as fields, residual / m^2")
def _cl507(p, ctx):
    details = {f"S{i}": bosons.spin_identities(bosons.spin_field(i, p))["p.S"] / p.m ** 2 for i in (1, 2)}
    return judge("CL-507", details, ctx.tol)


@claim("CL-508", "bosons", "gives the mass spectrum", "float",
       "S1.S1 = S2.S2 = -m^2 as fields, residual / m^2")
def _cl508(p, ctx):
    details = {f"S{i}": bosons.spin_identities(bosons.spin_field(i, p))["S.S+m^2"] / p.m ** 2
               for i in (1, 2)}
    return judge("CL-508", details, ctx.tol)


@claim("CL-509", "bosons", "are equal up to sign", "finding",
       "A and B fields computed from currents against the printed closed forms", expected="0 for every entry")
def _cl509(p, ctx):
    return judge("CL-509", bosons.closed_form_match(p), ctx.tol, kind="finding", expected=0.0,
                 notes="sources are s + C s; B checked for all four distinct solutions")


@claim("CL-510", "bosons", "transform the spin fields", "finding",
       "D S1(p, x) vs S2(Dp, Dx) and its mirror, D = diag(1, 1, -1, -1); printed and index-only readings",
       expected="0 for at least one reading")
def _cl510(p, ctx):
    r = bosons.parity_map_residuals(p, ctx.xs)
    return judge("CL-510", {k: v / p.m for k, v in r.items()}, ctx.tol, kind="finding", expected=0.0)


# ---- discrete algebra ----

@claim("CL-601", "algebra", "as required for time reversal operator", "exact",
       "T^2 = T~^2 = -1 with T = PC, T~ = gamma5 C", per_momentum=False)
def _cl601(ctx):
    o = standard_ops()
    return judge("CL-601", {"T^2+1": (o.T @ o.T).residual(-o.one),
                            "T~^2+1": (o.Tt @ o.Tt).residual(-o.one)}, 0, kind="exact")


@claim("CL-602", "algebra", "Two commuting, antilinear and antiunitary operators", "finding",
       "[T, T~]", expected="0", per_momentum=False)
def _cl602(ctx):
    o = standard_ops()
    c = commutator(o.T, o.Tt)
    return judge("CL-602", {"[T,T~]": c.residual(AntilinearOp.zero())}, 0, kind="finding",
                 expected=0.0, computed=c.describe())


@claim("CL-603", "algebra", "we had the unexpected result", "finding",
       "C P T in all six orderings, against -1", expected="-1", per_momentum=False)
def _cl603(ctx):
    o = standard_ops()
    prods = {k: v for k, v in symmetry.cpt_products().items() if "~" not in k}
    details = {k: v.residual(-o.one) for k, v in prods.items()}
    computed = {k: v.describe() for k, v in prods.items()}
    return judge("CL-603", details, 0, kind="finding", expected="-1", computed=computed,
                 notes="composition C@P@T applies T first; orderings with residual 0 equal -1")


@claim("CL-604", "algebra", "we had the unexpected result", "finding",
       "C P T~ in all six orderings, against gamma5 P = diag(1, -1, 1, -1)",
       expected="gamma5 P", per_momentum=False)
def _cl604(ctx):
    o = standard_ops()
    prods = {k: v for k, v in symmetry.cpt_products().items() if "~" in k}
    details = {k: v.residual(o.g5P) for k, v in prods.items()}
    computed = {k: v.describe() for k, v in prods.items()}
    return judge("CL-604", details, 0, kind="finding", expected="gamma5 P", computed=computed)


@claim("CL-605", "algebra", "and their action on spinors", "finding",
       "printed action of T and T~ on phi1, phi2 (relative norm residuals)", expected="0 for every entry")
def _cl605(p, ctx):
    return judge("CL-605", symmetry.spinor_action_residuals(p), ctx.tol, kind="finding", expected=0.0)


@claim("CL-606", "algebra", "on parity and chirality common eigenstates", "finding",
       "printed action of T and T~ on the eight eigenstates, per pairing", expected="0 for every entry")
def _cl606(p, ctx):
    details = {}
    for pairing in PAIRINGS:
        n = _norm_of(build_chiral(p, pairing))
        for k, v in symmetry.eigenstate_action_residuals(p, pairing).items():
            details[f"{pairing}:{k}"] = v / n
    return judge("CL-606", details, ctx.tol, kind="finding", expected=0.0)


@claim("CL-607", "algebra", "no linear combination with real coefficients", "finding",
       "dim ker(M - 1) for the real action matrix M of T and T~ on the eigenstates",
       expected="0")
def _cl607(p, ctx):
    details, computed = {}, {}
    for pairing in PAIRINGS:
        fp = symmetry.fixed_point_analysis(p, pairing)
        for op, entry in fp.items():
            key = f"{pairing}:{op}"
            computed[key] = {"fixed_dim": entry["fixed_dim"], "closure": entry["closure"],
                             "states": entry["states"]}
            # residual is the fixed-space dimension when the action closes
            if entry["fixed_dim"] is not None:
                details[key] = float(entry["fixed_dim"])
    return judge("CL-607", details, 0, kind="finding", expected=0, computed=computed,
                 notes="pairings whose action does not close over real combinations are listed with fixed_dim null")


@claim("CL-608", "algebra", "span the algebra of split-quaternions", "exact",
       "e1^2 = -1, e2^2 = e3^2 = 1, e1 e2 = e3 = -e2 e1 for the four subsets", per_momentum=False)
def _cl608(ctx):
    details = {}
    for name, ops in symmetry.split_quaternion_subsets().items():
        for k, v in symmetry.split_quaternion_residuals(*ops).items():
            details[f"{name}:{k}"] = v
    return judge("CL-608", details, 0, kind="exact")


@claim("CL-609", "algebra", "get the algebra of", "exact",
       "K3 = e3/2, K+- = (e1 +- e2)/2 satisfy so(2,1) for each subset", per_momentum=False)
def _cl609(ctx):
    details = {}
    for name, ops in symmetry.split_quaternion_subsets().items():
        for k, v in symmetry.so21_operator_residuals(*symmetry.k_basis(*ops)).items():
            details[f"{name}:{k}"] = v
    return judge("CL-609", details, 0, kind="exact")


@claim("CL-610", "algebra", "decomposed in two", "exact",
       "u and v sets each satisfy so(2,1) and all nine [u_i, v_j] vanish", per_momentum=False)
def _cl610(ctx):
    sets = symmetry.uv_sets()
    details = {}
    for name, ops in sets.items():
        for k, v in symmetry.so21_operator_residuals(*ops).items():
            details[f"{name}:{k}"] = v
    labels = ("3", "+", "-")
    for (a, u), (b, v) in itertools.product(zip(labels, sets["u"]), zip(labels, sets["v"])):
        details[f"[u{a},v{b}]"] = commutator(u, v).residual(AntilinearOp.zero())
    return judge("CL-610", details, 0, kind="exact")


def _fermionic(prefix: str):
    return {k: v for k, v in symmetry.fermionic_sector_residuals().items() if prefix(k)}


@claim("CL-611", "algebra", "anticomuting nilpotent operators", "exact",
       "a_i a_i = abar_i abar_i = a_i abar_i = abar_i a_i = 0 for i = 1, 2", per_momentum=False)
def _cl611(ctx):
    return judge("CL-611", _fermionic(lambda k: k.endswith("=0") and not k.startswith("[")), 0, kind="exact")


@claim("CL-612", "algebra", "bosonic operators which are obtained", "exact",
       "b3 = [a1,a2]/2 = [abar1,abar2]/2, bbar3 = [a1,abar2]/2 = [abar1,a2]/2, [b3, bbar3] = 0",
       per_momentum=False)
def _cl612(ctx):
    details = _fermionic(lambda k: k.startswith("b3=") or k.startswith("bbar3="))
    f = symmetry.fermionic_operators()
    details["[b3,bbar3]"] = commutator(f["b3"], f["bbar3"]).residual(AntilinearOp.zero())
    return judge("CL-612", details, 0, kind="exact")


@claim("CL-613", "algebra", "Lie brackets", "exact",
       "printed bracket table of b3, bbar3 with a1, a2, abar1, abar2", per_momentum=False)
def _cl613(ctx):
    return judge("CL-613", _fermionic(lambda k: k.startswith("[")), 0, kind="exact")


@claim("CL-614", "algebra", "satisfy the following relations", "exact",
       "printed product relations such as a1 a2 a1 = abar1", per_momentum=False)
def _cl614(ctx):
    return judge("CL-614", _fermionic(lambda k: " " in k), 0, kind="exact")


@claim("CL-615", "algebra", "anticomuting nilpotent operators", "finding",
       "pairwise anticommutators of P +- gamma5 C and gamma5 +- PC", expected="0", per_momentum=False)
def _cl615(ctx):
    r = symmetry.nilpotent_anticommutators()
    return judge("CL-615", {k: v for k, v in r.items() if k.startswith("{")}, 0, kind="finding",
                 expected=0.0, notes="squares: " + json.dumps({k: v for k, v in r.items() if k.startswith("(")}))


def flip_bracket(sc: lie.StructureConstants, x: str, y: str) -> lie.StructureConstants:
    """Copy of ``sc`` with the sign of one bracket (and its mirror) reversed."""
    out = lie.StructureConstants(list(sc.basis), dict(sc.brackets), set(sc.inferred))
    i, j = sc.index(x), sc.index(y)
    out.brackets[(i, j)] = -sc.brackets[(i, j)]
    out.brackets[(j, i)] = -sc.brackets[(j, i)]
    return out


@claim("CL-616", "algebra", "to get a 12-dimensional Lie algebra", "exact",
       "Jacobi checker: 0 on so(2,1) and su(2), nonzero after flipping [K3, K+] in so(2,1)",
       per_momentum=False)
def _cl616(ctx):
    flipped = lie.jacobi_residual(flip_bracket(lie.so21_table(), "K3", "Kp"))
    return judge("CL-616", {
        "so21": lie.jacobi_residual(lie.so21_table()),
        "su2": lie.jacobi_residual(lie.su2_table()),
        "flip_missed": float(flipped == 0),
    }, 0, kind="exact", notes=f"flipped so(2,1) residual {flipped}")


@claim("CL-617", "algebra", "to get a 12-dimensional Lie algebra", "finding",
       "Jacobi residual of the 12-generator table", expected="0", per_momentum=False)
def _cl617(ctx):
    sc = lie.twelve_dim_table()
    res = lie.jacobi_residual(sc)
    bad = lie.jacobi_violations(sc)
    computed = {"residual": res, "violating_triples": len(bad),
                "first": [list(t[:3]) for t in bad[:5]],
                "inferred": [f"[{x},{y}]=0" for x, y, _ in lie.INFERRED_TWELVE]}
    return judge("CL-617", {"jacobi": res}, 0, kind="finding", expected=0.0, computed=computed)


@claim("CL-618", "algebra", "In order to find the decomposition", "finding",
       "so(2,1) brackets of the printed u/v boson combinations inside the 12-generator table",
       expected="0 for every entry", per_momentum=False)
def _cl618(ctx):
    sc = lie.twelve_dim_table()
    c = lie.b_sector_combinations(sc)
    details = {}
    for name in ("u", "v"):
        for k, v in lie.so21_residuals(sc.bracket, c[name + "3"], c[name + "+"], c[name + "-"]).items():
            details[f"{name}:{k}"] = v
    for a, b in itertools.product(("u3", "u+", "u-"), ("v3", "v+", "v-")):
        details[f"[{a},{b}]"] = max(abs(float(x)) for x in sc.bracket(c[a], c[b]))
    dup = bool(np.array_equal(c["u+"], c["u-"]))
    return judge("CL-618", details, 0, kind="finding", expected=0.0,
                 notes=f"printed u+ and u- coincide: {dup}")


# -- harness -----------------------------------------------------------------------

def list_claims() -> list[Claim]:
    return [REGISTRY[k] for k in sorted(REGISTRY)]


def get_claim(cid: str) -> Claim:
    try:
        return REGISTRY[cid]
    except KeyError:
        raise UnknownClaim(cid) from None


def select(pattern: str = "*") -> list[Claim]:
    patterns = [s.strip() for s in pattern.split(",") if s.strip()] or ["*"]
    chosen = [c for c in list_claims() if any(fnmatch.fnmatchcase(c.id, pt) for pt in patterns)]
    for pt in patterns:
        if not any(fnmatch.fnmatchcase(c.id, pt) for c in list_claims()):
            raise UnknownClaim(pt)
    return chosen


def evaluate(c: Claim, ctx: Context) -> ClaimResult:
    if c.per_momentum:
        per = []
        for p in ctx.momenta:
            r = c.evaluator(p, ctx)
            r.inputs = {"m": p.m, "p": list(p.p)}
            per.append(r)
        out = merge(per)
        worst = dict(out.inputs)
    else:
        out = c.evaluator(ctx)
        worst = None
    out.inputs = {
        "masses": [float(m) for m in ctx.config.masses],
        "momenta": [list(v) for v in ctx.vectors] if c.per_momentum else [],
        "samples": ctx.config.samples,
        "seed": ctx.seed,
        "worst": worst,
    }
    if c.kind == "finding" and out.expected is None:
        out.expected = c.expected
    return out


@dataclass
class Report:
    version: str
    config: dict
    results: list[ClaimResult]
    summary: dict[str, int]

    def to_dict(self) -> dict:
        return {"version": self.version, "config": self.config,
                "results": [r.to_dict() for r in self.results], "summary": dict(self.summary)}

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["version"], d["config"], [ClaimResult.from_dict(r) for r in d["results"]],
                   dict(d["summary"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            anchor = REGISTRY[r.claim_id].anchor if r.claim_id in REGISTRY else ""
            lines.append(f"{r.claim_id} {r.status} {r.residual:.3e} {r.tolerance:.1e} {anchor}")
        s = self.summary
        lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['finding']} finding")
        return "\n".join(lines) + "\n"

    @property
    def exit_code(self) -> int:
        return 1 if self.summary["fail"] else 0


def run(config: RunConfig | None = None, pattern: str = "*") -> Report:
    config = config or RunConfig()
    chosen = select(pattern)
    ctx = Context.from_config(config)
    results = [evaluate(c, ctx) for c in chosen]
    summary = {"pass": sum(r.status == PASS for r in results),
               "fail": sum(r.status == FAIL for r in results),
               "finding": sum(r.status == FINDING for r in results)}
    return Report(REPORT_VERSION, ctx.describe(), results, summary)
