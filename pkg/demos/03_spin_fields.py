"""Proca and Maxwell potentials built from chiral currents, and the spin fields.

Run with ``python demos/03_spin_fields.py``.
"""
from __future__ import annotations

import numpy as np

from diracverify import bosons
from diracverify.numerics import Momentum

np.set_printoptions(precision=4, suppress=True)
p = Momentum(1.5, (0.4, 1.0, -0.6))

# A potentials oscillate at twice the momentum and obey the Proca equation
# with mass 2m; B potentials are constant four-vectors p / E.
for kind in "AB":
    v = bosons.build_potential(kind, "L", "psi1", p)
    r = bosons.field_equation_residuals(v)
    print(f"{kind}_L(psi1): harmonics {v.components.harmonics()}, wave {r['wave']:.1e}, gauge {r['gauge']:.1e}")
print("B =", bosons.build_potential("B", "R", "phi2", p).components.terms[0].real, " p/E =", p.four / p.energy)

# The spin fields computed from currents agree with the printed closed forms.
for name, res in sorted(bosons.closed_form_match(p).items()):
    if name.startswith("A_L"):
        print(f"  {name}: {res:.1e}")

s1, s2 = bosons.spin_field(1, p), bosons.spin_field(2, p)
print("\nS1.S1 + m^2 and p.S1:", bosons.spin_identities(s1))
print("entangled equations:", bosons.entangled_residuals(p))

# Contracting with p itself does not give zero: p.p = m^2, not 0.
print("p^a d_a S1 (size):", round(bosons.momentum_transport(p), 4))
