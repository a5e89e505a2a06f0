"""
H-homothetic deformations
=========================

Rescale the frame of the Heisenberg example and watch (alpha, delta) move
along the deformation law; then walk the a = 1, 2, 5 family of a 3-Sasaki
structure.
"""

from fractions import Fraction

from a3c import catalog
from a3c.acms import classify
from a3c.deform import (
    DeformParams,
    deform_parameters,
    h_deform,
    three_sasaki_family_row,
    to_3_alpha_sasaki,
    to_neg_pair,
)
from a3c.errors import NotRationallyRealizable


def show(pair):
    return "(" + ", ".join(str(x) for x in pair) + ")"


S = catalog.heisenberg(1)
alpha, delta = classify(S).three_alpha_delta_sasaki

for s, c in [(1, 2), (Fraction(3, 2), Fraction(1, 2)), (1, -1)]:
    p = DeformParams(s, c)
    T = h_deform(S, p)
    got = classify(T).three_alpha_delta_sasaki
    print(f"s={s}, c={c}: classified {show(got)}, predicted {show(deform_parameters(alpha, delta, p))}")

###############################################################################
# Reaching the hyperbolas alpha' = delta' and alpha' = -delta'

p = to_3_alpha_sasaki(1, 4)
print("(1, 4) -> s, c =", show((p.s, p.c)), "gives", show(deform_parameters(1, 4, p)))
p = to_neg_pair(-1, 4)
print("(-1, 4) -> s, c =", show((p.s, p.c)), "gives", show(deform_parameters(-1, 4, p)))
try:
    to_3_alpha_sasaki(1, 2)
except NotRationallyRealizable as exc:
    print("(1, 2):", exc)

###############################################################################
# The family a > 0, b = 1 - a, c = 1

for a in (1, 2, 5):
    row = three_sasaki_family_row(a)
    flags = [k for k in ("three_sasaki", "parallel", "einstein", "nabla_einstein") if getattr(row, k)]
    print(f"a={a}: alpha={row.alpha}, beta={row.beta}, {', '.join(flags)}")
