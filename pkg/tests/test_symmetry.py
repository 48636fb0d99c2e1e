from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from diracverify import symmetry
from diracverify.numerics import to_float
from diracverify.operators import AntilinearOp, commutator
from diracverify.solutions import build_chiral


def test_fixed_space_calibration():
    assert symmetry.fixed_space_dimension(np.eye(8)) == 8
    assert symmetry.fixed_space_dimension(-np.eye(8)) == 0
    swap = np.array([[0, 1], [1, 0]])
    assert symmetry.fixed_space_dimension(swap) == 1


def test_real_action_of_identity(p):
    st = build_chiral(p, "sum").states
    names, m, closure = symmetry.real_action_matrix(AntilinearOp.identity(), st)
    assert closure <= 1e-12
    assert np.allclose(m, np.eye(len(names)))
    assert symmetry.fixed_space_dimension(m) == len(names)
    names, m, _ = symmetry.real_action_matrix(-AntilinearOp.identity(), st)
    assert symmetry.fixed_space_dimension(m) == 0


def test_fixed_points_of_time_reversal(p):
    fp = symmetry.fixed_point_analysis(p, "1")
    for op in ("T", "T~"):
        assert fp[op]["closure"] <= 1e-9
        assert fp[op]["fixed_dim"] == 0
    # for the second pairing the action leaves the real span
    assert symmetry.fixed_point_analysis(p, "2")["T"]["fixed_dim"] is None


def test_hamiltonian_anticommutation(p):
    r = symmetry.hamiltonian_anticommutation(p)
    assert max(r.values()) <= 1e-9 * p.energy


def test_c_table_pairing_one(p):
    assert max(symmetry.c_table_residuals(p, "1").values()) <= 1e-12
    assert max(symmetry.chiral_swap_residuals(p, "1").values()) <= 1e-12


def test_cpt_orderings(ops):
    prods = symmetry.cpt_products()
    assert len(prods) == 12
    one = AntilinearOp.identity()
    minus = {k for k, v in prods.items() if "~" not in k and v == -one}
    plus = {k for k, v in prods.items() if "~" not in k and v == one}
    assert minus | plus == {"CPT", "CTP", "PCT", "PTC", "TCP", "TPC"}
    assert "CPT" in plus
    assert to_float(prods["CPT~"].matrix).diagonal().real.tolist() == [1, -1, 1, -1]
    assert prods["CPT~"] == ops.g5P


def test_split_quaternions():
    for ops in symmetry.split_quaternion_subsets().values():
        assert max(symmetry.split_quaternion_residuals(*ops).values()) == 0
        assert max(symmetry.so21_operator_residuals(*symmetry.k_basis(*ops)).values()) == 0


def test_uv_decomposition():
    sets = symmetry.uv_sets()
    for ops in sets.values():
        assert max(symmetry.so21_operator_residuals(*ops).values()) == 0
    for u in sets["u"]:
        for v in sets["v"]:
            assert commutator(u, v) == AntilinearOp.zero()


def test_fermionic_sector():
    assert max(symmetry.fermionic_sector_residuals().values()) == 0
    f = symmetry.fermionic_operators()
    assert Fraction(1, 2) * commutator(f["a1"], f["a2"]) == f["b3"]


def test_nilpotent_operators_square_to_zero_but_do_not_all_anticommute(ops):
    r = symmetry.nilpotent_anticommutators()
    assert all(v == 0 for k, v in r.items() if k.startswith("("))
    assert (ops.P + ops.g5C) @ (ops.P - ops.g5C) + (ops.P - ops.g5C) @ (ops.P + ops.g5C) == \
        Fraction(4) * AntilinearOp.identity()


def test_spinor_action_table(p):
    r = symmetry.spinor_action_residuals(p)
    assert r["T phi2 = i P psi2"] <= 1e-12
    assert r["T phi1 = g5 psi1"] > 0.1


@pytest.mark.parametrize("pairing", ("1",))
def test_eigenstate_action_table_first_pairing(p, pairing):
    assert max(symmetry.eigenstate_action_residuals(p, pairing).values()) <= 1e-12
