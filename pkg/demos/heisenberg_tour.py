"""
The quaternionic Heisenberg group, step by step
===============================================

Build the 7-dimensional example, classify it, and look at its canonical
connection.  Everything stays exact and symbolic in lambda.
"""

from a3c import catalog
from a3c.acms import classify, fundamental_forms, nijenhuis
from a3c.connections import canonical_connection, characteristic_torsion, sasaki_closed_forms
from a3c.liegeom import levi_civita, ricci

S = catalog.heisenberg(1)
print(S.name, "dimension", S.dim)

# brackets of the horizontal frame land in the vertical part
for a, b in [(3, 4), (3, 5), (5, 6)]:
    print(f"[{S.geometry.frame.names[a]}, {S.geometry.frame.names[b]}] =", S.geometry.bracket(a, b))

# exterior derivatives of the contact forms
print("d eta_1 =", S.d_eta(0))
print("Phi_1   =", fundamental_forms(S)[0])

###############################################################################
# Classification

report = classify(S)
alpha, delta = report.three_alpha_delta_sasaki
print("3-(alpha, delta)-Sasaki with alpha =", alpha, "delta =", delta)
print("hypernormal:", report.hypernormal, " canonical:", report.canonical)
print("beta =", report.reeb_killing_beta)
print("N_phi1 vanishes:", nijenhuis(S, 0).is_zero)

###############################################################################
# Canonical connection and its torsion

cc = canonical_connection(S)
print("T   =", cc.torsion)
print("T_1 =", characteristic_torsion(S, 0))

rep = sasaki_closed_forms(S, cc)
for c in rep:
    print(f"  {c.status:5} {c.id}")

###############################################################################
# Ricci tensors, by brute force from the curvature

ric = ricci(cc.connection)
ric_g = ricci(levi_civita(S.geometry))
print("canonical Ric on V, H:", ric(0, 0), ric(3, 3))
print("Riemannian Ric on V, H:", ric_g(0, 0), ric_g(3, 3))
