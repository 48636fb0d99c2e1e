from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from diracverify import lie
from diracverify.claims import flip_bracket


def test_parse_and_round_trip():
    sc = lie.so21_table()
    again = lie.parse_table(sc.to_text())
    assert again.basis == sc.basis
    for key, v in sc.brackets.items():
        assert np.array_equal(again.brackets[key], v)


def test_parse_linear():
    assert lie.parse_linear("2*a - 1/2*b + c") == {"a": 2, "b": Fraction(-1, 2), "c": 1}
    assert lie.parse_linear("0") == {}
    with pytest.raises(lie.TableError):
        lie.parse_linear("2*a + 3")


def test_antisymmetry_filled_in():
    sc = lie.so21_table()
    i, j = sc.index("K3"), sc.index("Kp")
    assert np.array_equal(sc.brackets[(j, i)], -sc.brackets[(i, j)])


def test_conflicting_entries_rejected():
    with pytest.raises(lie.TableError):
        lie.parse_table("bracket x y = z\nbracket y x = z\n")
    with pytest.raises(lie.TableError):
        lie.parse_table("bracket x x = y\n")


def test_missing_pair_reported():
    sc = lie.parse_table("basis x y z\nbracket x y = z\n")
    with pytest.raises(lie.IncompleteTable) as err:
        lie.jacobi_residual(sc)
    assert err.value.pair == ("x", "z")


def test_catalog_tables_are_lie():
    assert lie.jacobi_residual(lie.so21_table()) == 0
    assert lie.jacobi_residual(lie.su2_table()) == 0


def test_sign_flip_detected():
    # [[K3,Kp],Km] + [[Kp,Km],K3] + [[Km,K3],Kp] with [K3,Kp] = -Kp gives -4 K3
    assert lie.jacobi_residual(flip_bracket(lie.so21_table(), "K3", "Kp")) == 4
    assert lie.jacobi_residual(flip_bracket(lie.so21_table(), "K3", "Km")) == 4


def test_some_sign_flips_stay_lie():
    # Flipping [Kp, Km] just rescales K3 against the other pair, which is again
    # a Lie algebra (isomorphic to su(2) over the reals after K+- -> i K+-).
    assert lie.jacobi_residual(flip_bracket(lie.so21_table(), "Kp", "Km")) == 0
    assert lie.jacobi_residual(flip_bracket(lie.su2_table(), "J1", "J2")) == 0


def test_bilinear_bracket():
    sc = lie.su2_table()
    u = sc.vector({"J1": 2, "J2": 1})
    v = sc.vector({"J2": 3})
    assert list(sc.bracket(u, v)) == [0, 0, 6]


def test_twelve_dim_table():
    raw = lie.twelve_dim_table(infer=False)
    assert set(raw.missing_pairs()) == {(x, y) for x, y, _ in lie.INFERRED_TWELVE}
    sc = lie.twelve_dim_table()
    assert sc.missing_pairs() == []
    assert sc.inferred == {(x, y) for x, y, _ in lie.INFERRED_TWELVE}
    res = lie.jacobi_residual(sc)
    assert res > 0
    assert all(size > 0 for *_, size in lie.jacobi_violations(sc))


def test_b_sector_as_printed():
    sc = lie.twelve_dim_table()
    c = lie.b_sector_combinations(sc)
    assert np.array_equal(c["u+"], c["u-"])
    r = lie.so21_residuals(sc.bracket, c["u3"], c["u+"], c["u-"])
    assert r["[3,+]-(+)"] > 0


def test_so21_residuals_on_catalog():
    sc = lie.so21_table()
    e = {n: sc.vector({n: 1}) for n in sc.basis}
    assert max(lie.so21_residuals(sc.bracket, e["K3"], e["Kp"], e["Km"]).values()) == 0
