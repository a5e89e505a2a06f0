"""
The parallelized 7-sphere, point by point
=========================================

e_i(x) = kappa_i x gives a frame on S^7 whose brackets vary with x.  The
structure is checked at exact rational points of the sphere.
"""

from fractions import Fraction

from a3c.acms import nijenhuis, reeb_commutator
from a3c.spin7 import SAMPLE_POINTS, alpha_ijk, s7_point_report, s7_structure

S = s7_structure()
for x in SAMPLE_POINTS[:4]:
    Sx = S.at(x)
    N = ["0" if nijenhuis(Sx, i).is_zero else "nonzero" for i in range(3)]
    print(x, "delta =", reeb_commutator(Sx), "N_phi:", N)

# delta is a function on the sphere, not a constant
print("alpha_123 at a basis point:", alpha_ijk((1, 0, 0, 0, 0, 0, 0, 0), 0, 1, 2))
print("alpha_123 at (3/5, 4/5, 0, ...):", alpha_ijk((Fraction(3, 5), Fraction(4, 5)) + (0,) * 6, 0, 1, 2))

for c in s7_point_report(SAMPLE_POINTS[1]):
    print(f"  {c.status:5} {c.id}")
