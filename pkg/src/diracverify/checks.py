"""Single-input checks returning a ClaimResult, for interactive use and tests.

The registry in :mod:`diracverify.claims` runs the same computations over a grid
of masses and momenta; these wrappers evaluate one input at a time.
"""
from __future__ import annotations

import numpy as np

from . import bosons, lie, symmetry
from .claims import REGISTRY, Context, RunConfig, box_relation_residuals, helicity_ladder
from .numerics import Momentum
from .operators import AntilinearOp, commutator
from .results import ClaimResult, judge
from .solutions import ChiralStates

TOL = 1e-9


def _context(p: Momentum, samples: int = 20, seed: int = 0) -> Context:
    return Context.from_config(RunConfig(masses=(p.m,), momenta=(tuple(p.p),), samples=samples, seed=seed))


def _registered(cid: str, p: Momentum | None = None) -> ClaimResult:
    c = REGISTRY[cid]
    if c.per_momentum:
        return c.evaluator(p, _context(p))
    return c.evaluator(_context(Momentum(1.0, (0.0, 0.0, 1.0))))


def majorana_check(states: ChiralStates, xs=None) -> ClaimResult:
    if xs is None:
        xs = np.random.default_rng(0).uniform(-5, 5, size=(20, 4))
    r = symmetry.majorana_residual(states.momentum, states.pairing, xs)
    return judge("CL-210", {states.pairing: r}, TOL, kind="finding", expected=0.0)


def helicity_check(states: ChiralStates, p: Momentum) -> ClaimResult:
    """Convergence of the chiral helicity residuals along z, starting at E/m = 10."""
    if p.p[0] != 0 or p.p[1] != 0:
        raise ValueError("helicity check needs momentum along z")
    ladder = helicity_ladder(p.m, states.pairing)
    details = {}
    for step in range(len(ladder) - 1):
        for side, idx in (("L", 0), ("R", 1)):
            details[f"{side}:{step}"] = ladder[step + 1][idx] / ladder[step][idx]
    return judge("CL-405", details, 0.6)


def derivative_current_relations(p: Momentum) -> ClaimResult:
    return _registered("CL-501", p)


def box_relations(p: Momentum, pairing: str = "1") -> ClaimResult:
    from .solutions import build_chiral
    st = build_chiral(p, pairing)
    details = {}
    for ch in "LR":
        for k, v in box_relation_residuals(getattr(st, "X" + ch)).items():
            details[f"{ch}:{k}"] = v
    return judge("CL-502", details, TOL)


def proca_maxwell_check(v: bosons.VectorPotential) -> ClaimResult:
    f = v.components
    sc = f.scale() * max(1.0, 4 * f.momentum.m ** 2, f.momentum.energy)
    details = {k: r / sc if sc > 0 else r for k, r in bosons.field_equation_residuals(v).items()}
    return judge("CL-504" if v.kind == "A" else "CL-505", details, TOL)


def closed_form_match(p: Momentum) -> ClaimResult:
    return _registered("CL-509", p)


def entangled_pde_check(p: Momentum) -> ClaimResult:
    return _registered("CL-503", p)


def parity_map_check(p: Momentum) -> ClaimResult:
    return _registered("CL-510", p)


def hamiltonian_anticommutation_check(p: Momentum) -> ClaimResult:
    r = symmetry.hamiltonian_anticommutation(p)
    return judge("CL-202", {k: v / p.energy for k, v in r.items()}, TOL)


def cpt_products() -> ClaimResult:
    a, b = _registered("CL-603"), _registered("CL-604")
    details = {f"CPT:{k}": v for k, v in a.details.items()}
    details.update({f"CPT~:{k}": v for k, v in b.details.items()})
    return judge("CL-603", details, 0, kind="finding", expected={"CPT": "-1", "CPT~": "gamma5 P"},
                 computed={"CPT": a.computed, "CPT~": b.computed})


def action_table_check(p: Momentum) -> ClaimResult:
    a, b = _registered("CL-605", p), _registered("CL-606", p)
    return judge("CL-606", {**a.details, **b.details}, TOL, kind="finding", expected=0.0)


def fixed_point_analysis(p: Momentum) -> ClaimResult:
    return _registered("CL-607", p)


def split_quaternion_check(ops: tuple[AntilinearOp, AntilinearOp, AntilinearOp, AntilinearOp]) -> ClaimResult:
    if len(ops) != 4 or ops[0] != AntilinearOp.identity():
        raise ValueError("expected four operators, the first being the identity")
    return judge("CL-608", symmetry.split_quaternion_residuals(*ops[1:]), 0, kind="exact")


def so21_check(three: AntilinearOp, plus: AntilinearOp, minus: AntilinearOp,
               others: tuple[AntilinearOp, ...] = ()) -> ClaimResult:
    """so(2,1) brackets; with ``others`` also requires every cross-commutator to vanish."""
    details = symmetry.so21_operator_residuals(three, plus, minus)
    zero = AntilinearOp.zero()
    for i, a in enumerate((three, plus, minus)):
        for j, b in enumerate(others):
            details[f"[{i},{j}]"] = commutator(a, b).residual(zero)
    return judge("CL-610" if others else "CL-609", details, 0, kind="exact")


def fermionic_sector_check() -> ClaimResult:
    return judge("CL-613", symmetry.fermionic_sector_residuals(), 0, kind="exact")


def jacobi_residual(sc: lie.StructureConstants) -> float:
    return lie.jacobi_residual(sc)


def b_sector_decomposition_check() -> ClaimResult:
    return _registered("CL-618")
