"""The twelve acceptance criteria, exact (zero tolerance).

Each criterion prints one line ``PASS|FAIL criterion N: ...``.  Run with
``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import sys
import time
from fractions import Fraction

import pytest

from a3c import catalog
from a3c.acms import classify, lemma_n_residual, nijenhuis, sphere_identity_residual
from a3c.connections import (
    canonical_checks,
    canonical_connection,
    characteristic_torsion,
    compatible_family_checks,
    cone_checks,
    einstein_factorization,
    phi_compatible_exists,
    ricci_closed_forms,
    sasaki_closed_forms,
    torsion_relation_check,
)
from a3c.deform import DeformParams, deform_parameters, h_deform, three_sasaki_family_row
from a3c.liegeom import lie_derivative_metric
from a3c.scalar import param
from a3c.spin7 import (
    SAMPLE_POINTS,
    canonical_spinor,
    clifford_mul,
    cocalibration,
    default_points,
    form_action,
    g2_characteristic_torsion,
    g2_form,
    generalized_killing_check,
    omega_spectrum_ok,
    s7_pointwise_suite,
    s7_structure,
)
from a3c.suites import sphere_points

lam = param("lambda", positive=True)
delta = param("delta")
TIME_LIMIT_S = 5.0


def heis_deformations():
    h = catalog.heisenberg(1)
    return [h_deform(h, DeformParams(1, 2)), h_deform(h, DeformParams(Fraction(3, 2), Fraction(1, 2)))]


def all_members():
    out = dict(catalog.lie_group_examples(1))
    out["heisenberg_n2"] = catalog.heisenberg(2)
    out["su2_edge"] = catalog.su2_edge()
    return out


def timed(fn, *args):
    t0 = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - t0


def criterion_1():
    bad = []
    for n in (1, 2):
        r, t = timed(classify, catalog.heisenberg(n))
        if r.three_alpha_delta_sasaki != (lam / 2, 0) or t > TIME_LIMIT_S:
            bad.append(f"heisenberg n={n}")
    r, t = timed(classify, catalog.so3_flat(1))
    if r.three_delta_cosymplectic != delta or not r.parallel or t > TIME_LIMIT_S:
        bad.append("so3_flat")
    r, t = timed(classify, catalog.nilpotent_three_family(1))
    if not r.canonical or r.reeb_killing_beta != -1 or r.three_alpha_delta_sasaki is not None or t > TIME_LIMIT_S:
        bad.append("nilpotent_three_family")
    for name in ("real_heisenberg_product", "complex_heisenberg_product"):
        r, t = timed(classify, catalog.build(name))
        if not all(r.phi_compatible_exists) or r.canonical or r.hypernormal or t > TIME_LIMIT_S:
            bad.append(name)
    return not bad, "classification of the six catalog cases" + (f"; wrong: {bad}" if bad else "")


def criterion_2():
    structures = [catalog.heisenberg(1), catalog.heisenberg(2)] + heis_deformations()
    bad = [S.name for S in structures
           if not classify(S).three_alpha_delta_sasaki or not all(nijenhuis(S, i).is_zero for i in range(3))]
    return not bad, f"N_phi1 = N_phi2 = N_phi3 = 0 on {len(structures)} Sasaki structures" + (f"; {bad}" if bad else "")


def criterion_3():
    structures = [catalog.heisenberg(1), catalog.heisenberg(2)] + heis_deformations()
    wanted = {"sasaki.T_eta_deta", "sasaki.T_horizontal", "sasaki.nabla_T", "sasaki.dT_full", "sasaki.dT_horizontal"}
    bad = []
    for S in structures:
        rep = sasaki_closed_forms(S)
        if not wanted <= {c.id for c in rep} or not rep.ok:
            bad.append(S.name)
    return not bad, f"canonical torsion and dT closed forms, nabla T = 0 on {len(structures)} structures" + (
        f"; {bad}" if bad else "")


def criterion_4():
    bad = []
    for S in (catalog.heisenberg(1), catalog.nilpotent_three_family(1)):
        if not all(r.is_zero for r in torsion_relation_check(S).values()):
            bad.append(S.name)
    so3 = catalog.so3_flat(1)
    cc = canonical_connection(so3)
    if not (cc.beta.is_zero and all(characteristic_torsion(so3, i) == cc.torsion for i in range(3))):
        bad.append("so3_flat collapse")
    return not bad, "T - T_i = -beta(eta_j^Phi_j + eta_k^Phi_k); T1 = T2 = T3 = T when beta = 0" + (
        f"; {bad}" if bad else "")


def criterion_5():
    bad = []
    for n in (1, 2):
        rep = ricci_closed_forms(catalog.heisenberg(n))
        if not (rep["ricci.canonical"].passed and rep["ricci.levi_civita"].passed):
            bad.append(f"n={n}")
    if not einstein_factorization().is_zero:
        bad.append("factorization")
    return not bad, "canonical and Riemannian Ricci closed forms, n = 1, 2; Einstein factorization" + (
        f"; {bad}" if bad else "")


def criterion_6():
    bad = []
    h = catalog.heisenberg(1)
    for s, c in ((1, 2), (2, 3), (1, -1), (Fraction(3, 2), Fraction(1, 2)), (2, Fraction(5, 2))):
        p = DeformParams(s, c)
        if classify(h_deform(h, p)).three_alpha_delta_sasaki != deform_parameters(lam / 2, 0, p):
            bad.append((s, c))
    rows = {a: three_sasaki_family_row(a) for a in (1, 2, 5)}
    table_ok = (rows[1].einstein and rows[1].three_sasaki and rows[1].beta == -2
                and rows[2].parallel and rows[2].beta == 0
                and rows[5].einstein and rows[5].nabla_einstein and rows[5].beta == Fraction(6, 5))
    if not table_ok:
        bad.append("family table")
    return not bad, "alpha' = alpha c/a, delta' = delta/c by classification; a = 1, 2, 5 table" + (
        f"; {bad}" if bad else "")


def criterion_7():
    bad, count = [], 0
    for name, S in all_members().items():
        killing = all(lie_derivative_metric(S.geometry, S.xi(i)).is_zero for i in range(3))
        if not killing or not phi_compatible_exists(S):
            continue
        count += 1
        rep = compatible_family_checks(S)
        if "compatible.nabla_xi" not in {c.id for c in rep} or not rep.ok:
            bad.append(name)
    return not bad and count > 0, f"symbolic-gamma compatible family on {count} Killing-Reeb members" + (
        f"; {bad}" if bad else "")


def criterion_8():
    bad, count = [], 0
    for name, S in all_members().items():
        if not classify(S).canonical:
            continue
        count += 1
        if not canonical_checks(S).ok:
            bad.append(name)
    return not bad and count > 0, f"canonical derivative laws, nabla Psi = 0, nabla eta_123 = 0 on {count} members" + (
        f"; {bad}" if bad else "")


def criterion_9():
    S = catalog.heisenberg(1)
    alpha, d = lam / 2, 0
    bad = []
    if not cocalibration(S).is_zero:
        bad.append("d*omega")
    cc = canonical_connection(S)
    if g2_characteristic_torsion(S) != cc.torsion:
        bad.append("torsion")
    if not omega_spectrum_ok(form_action(g2_form(S).omega)):
        bad.append("spectrum")
    psi0 = canonical_spinor(S)
    if clifford_mul(cc.torsion, psi0) != psi0 * -(alpha * 4 + d * 2):
        bad.append("T.psi0")
    mu_h, mu_v = alpha * Fraction(-3, 2), (alpha * 2 - d) / 2
    if generalized_killing_check(S, psi0).numbers != (mu_v,) * 3 + (mu_h,) * 4:
        bad.append("psi0 numbers")
    for i in range(3):
        want = tuple((alpha * 2 - d) / 2 if a == i else (d * 3 - alpha * 2) / 2 if a < 3 else alpha / 2
                     for a in range(7))
        if generalized_killing_check(S, clifford_mul(i, psi0)).numbers != want:
            bad.append(f"psi{i + 1} numbers")
    return not bad, "G2: cocalibrated, torsion, spectrum, T.psi0, Killing numbers" + (f"; {bad}" if bad else "")


def criterion_10():
    rep = cone_checks(catalog.heisenberg(1))
    ids = {c.id for c in rep}
    ok = rep.ok and {"cone.S_equal", "cone.J1J2", "cone.J2J1"} <= ids
    return ok, "S_1 = S_2 = S_3 = T'; J_1 J_2 = J_3 = -J_2 J_1 in rho"


def criterion_11():
    points = default_points(3)
    rep = s7_pointwise_suite(points)
    kinds = {c.id.split("].")[1] for c in rep}
    need = {"delta", "alpha_skew", "nijenhuis_skew", "non_hypernormal", "A_zero", "flat_torsion_skew"}
    ok = rep.ok and need <= kinds and len(points) >= 3
    return ok, f"S7 pointwise identities at {len(points)} rational unit points"


def criterion_12():
    members = all_members()
    pointwise = {f"s7@{k}": s7_structure().at(SAMPLE_POINTS[k]) for k in range(3)}
    points = sphere_points()
    bad = []
    for name, S in {**members, **pointwise}.items():
        if not all(lemma_n_residual(S, i).is_zero for i in range(3)):
            bad.append(f"{name}: lemma")
        if not all(sphere_identity_residual(S, a).is_zero for a in points):
            bad.append(f"{name}: sphere")
    return not bad and len(points) == 10, (
        f"Nijenhuis lemma and sphere identity at {len(points)} points on {len(members) + len(pointwise)} structures"
        + (f"; {bad}" if bad else ""))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


def line(n, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"


@pytest.mark.parametrize("n", range(1, 13))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for n, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        results.append(ok)
        print(line(n, ok, detail))
    sys.exit(0 if all(results) else 1)
