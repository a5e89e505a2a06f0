"""
The canonical G2-structure and its spinor
=========================================

On a 7-dimensional 3-(alpha, delta)-Sasaki structure the form
omega = sum eta_i ^ Phi_i^H + eta_123 is cocalibrated.  Its -7 eigenspinor is
a generalized Killing spinor.  The formal first-order model keeps alpha and
delta symbolic.
"""

from a3c import catalog
from a3c.connections import canonical_connection
from a3c.spin7 import (
    canonical_spinor,
    clifford_mul,
    cocalibration,
    expected_killing_numbers,
    g2_characteristic_torsion,
    g2_form,
    g2_inner,
    generalized_killing_check,
)

S = catalog.heisenberg(1)
G = g2_form(S)
print("omega =", G.omega)
print("d * omega = 0:", cocalibration(S).is_zero)
print("<d omega, * omega> =", g2_inner(S))

T = g2_characteristic_torsion(S)
print("G2 torsion equals canonical torsion:", T == canonical_connection(S).torsion)

psi0 = canonical_spinor(S)
print("psi_0 =", psi0)
print("T . psi_0 =", clifford_mul(T, psi0))
print("Killing numbers of psi_0:", [str(x) for x in generalized_killing_check(S, psi0).numbers])

###############################################################################
# Symbolic alpha and delta

M = catalog.first_order_sasaki_model()
print("<d omega, * omega> =", g2_inner(M))
psi0 = canonical_spinor(M)
for which in (None, 0):
    psi = psi0 if which is None else clifford_mul(which, psi0)
    got = generalized_killing_check(M, psi).numbers
    print("psi" + ("0" if which is None else str(which + 1)), [str(x) for x in got],
          got == expected_killing_numbers(M, which))
