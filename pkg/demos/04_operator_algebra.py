"""The antilinear operator algebra and the 12-generator bracket table.

Run with ``python demos/04_operator_algebra.py``.
"""
from __future__ import annotations

from diracverify import lie, symmetry
from diracverify.operators import AntilinearOp, standard_ops

ops = standard_ops()
one = AntilinearOp.identity()

print("T^2 = -1:", ops.T @ ops.T == -one, "  T~^2 = -1:", ops.Tt @ ops.Tt == -one)

# Products with C, P and T depend on the order; list them all.
for name, op in symmetry.cpt_products().items():
    if "~" in name:
        continue
    value = "+1" if op == one else "-1" if op == -one else "other"
    print(f"  {name} = {value}")
print("C P T~ equals gamma5 P:", symmetry.cpt_products()["CPT~"] == ops.g5P)

# Split-quaternion subsets and their so(2,1) bases.
for name, triple in symmetry.split_quaternion_subsets().items():
    worst = max(symmetry.split_quaternion_residuals(*triple).values())
    print(f"  {name}: split-quaternion residual {worst}")

# The abstract 12-generator table: complete once two families of obviously
# zero brackets are filled in, but the Jacobi identity does not hold.
sc = lie.twelve_dim_table()
bad = lie.jacobi_violations(sc)
print(f"\n12-generator table: Jacobi residual {lie.jacobi_residual(sc)}, {len(bad)} violating triples")
for triple in bad[:5]:
    print("  ", triple)
