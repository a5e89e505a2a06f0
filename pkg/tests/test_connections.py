from fractions import Fraction

import pytest

from a3c import catalog
from a3c.acms import CYCLIC, A3CStructure, classify, fundamental_forms, horizontal_forms, standard_phi
from a3c.connections import (
    canonical_checks,
    canonical_connection,
    characteristic_checks,
    characteristic_torsion,
    compatible_family_checks,
    cone_checks,
    cone_endomorphisms,
    einstein_factorization,
    nabla_xi_phi_residual,
    nt_identity_residual,
    phi_compatible_connection,
    phi_compatible_exists,
    phi_compatible_torsion,
    ricci_closed_forms,
    sasaki_closed_forms,
    torsion_relation_check,
)
from a3c.deform import DeformParams, h_deform
from a3c.errors import ExistenceFailed, NonNegativeBeta, NotCanonical, NotKilling, NotSasakiFamily, NotSkew
from a3c.frame_alg import Endo, one_form, wedge
from a3c.liegeom import ConstantBrackets, LieFrameGeometry, ricci
from a3c.scalar import param

lam = param("lambda", positive=True)
delta = param("delta")
gamma = param("gamma")

EXAMPLES = catalog.lie_group_examples(1)
EXAMPLES["heisenberg_n2"] = catalog.heisenberg(2)
CANONICAL = ["heisenberg", "heisenberg_n2", "so3_flat", "nilpotent_three_family"]
SASAKI = {
    "heisenberg_n1": catalog.heisenberg(1),
    "heisenberg_n2": catalog.heisenberg(2),
    "heisenberg_s1_c2": h_deform(catalog.heisenberg(1), DeformParams(1, 2)),
    "heisenberg_s3/2_c1/2": h_deform(catalog.heisenberg(1), DeformParams(Fraction(3, 2), Fraction(1, 2))),
}


def eta_deta(S):
    return sum((wedge(S.eta(i), S.d_eta(i)) for i in (1, 2)), wedge(S.eta(0), S.d_eta(0)))


def eta_phi(S, i):
    return wedge(S.eta(i), fundamental_forms(S)[i])


def non_killing():
    S = catalog.heisenberg(1)
    table = {k: dict(v) for k, v in S.geometry.brackets.items()}
    table[(0, 3)] = {3: 1}
    return A3CStructure(LieFrameGeometry(S.geometry.frame, ConstantBrackets(7, table)), standard_phi(1), "bad")


class TestExistence:
    @pytest.mark.parametrize("a", [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    def test_heisenberg(self, heis1, a):
        assert phi_compatible_exists(heis1, a)

    def test_complex_heisenberg(self, complex_h):
        assert phi_compatible_exists(complex_h, (1, 0, 0))

    def test_non_killing_reeb_fails_second_condition(self):
        res = phi_compatible_exists(non_killing())
        assert not res
        assert res.condition.startswith("(ii)")

    def test_torsion_raises(self):
        with pytest.raises(ExistenceFailed):
            phi_compatible_torsion(non_killing(), gamma)


class TestCompatibleFamily:
    def test_heisenberg_closed_form(self, heis1):
        T = phi_compatible_torsion(heis1, gamma)
        assert T == eta_deta(heis1) + heis1.eta123() * gamma
        assert T(0, 1, 2) == gamma

    @pytest.mark.parametrize("fixture", ["heis1", "heis2", "model"])
    def test_sasaki_closed_forms(self, fixture, request):
        S = request.getfixturevalue(fixture)
        alpha, d = classify(S).three_alpha_delta_sasaki
        T = phi_compatible_torsion(S, gamma)
        PhiH = horizontal_forms(S)
        horizontal = sum((wedge(S.eta(i), PhiH[i]) for i in (1, 2)), wedge(S.eta(0), PhiH[0]))
        assert T == horizontal * (alpha * 2) + S.eta123() * gamma
        assert T == eta_deta(S) + S.eta123() * (d * 6 + gamma)

    def test_eight_delta_coefficient_contradicts_gamma(self, model):
        alpha, d = param("alpha"), param("delta")
        literal = eta_deta(model) + model.eta123() * (d * 8 - alpha * 4 + gamma)
        assert literal(0, 1, 2) - gamma == d * 2 - alpha * 4
        assert literal != phi_compatible_torsion(model, gamma)

    def test_canonical_parameter(self, model):
        alpha, d = param("alpha"), param("delta")
        cc = canonical_connection(model)
        assert cc.gamma == (d - alpha * 4) * 2

    def test_difference_is_vertical_volume(self, heis1):
        g1, g2 = param("g1"), param("g2")
        diff = phi_compatible_torsion(heis1, g1) - phi_compatible_torsion(heis1, g2)
        assert diff == heis1.eta123() * (g1 - g2)

    @pytest.mark.parametrize("name", sorted(EXAMPLES))
    def test_uniqueness(self, name):
        S = EXAMPLES[name]
        if not phi_compatible_exists(S):
            pytest.skip("no compatible connection")
        assert (phi_compatible_torsion(S, gamma) - phi_compatible_torsion(S, gamma)).is_zero

    @pytest.mark.parametrize("name", sorted(EXAMPLES))
    def test_post_conditions(self, name):
        S = EXAMPLES[name]
        if not phi_compatible_exists(S):
            pytest.skip("no compatible connection")
        rep = compatible_family_checks(S)
        assert rep.ok, [c for c in rep.failures()]
        assert "compatible.nabla_xi" in {c.id for c in rep}

    def test_canonical_gamma_reproduces_canonical_torsion(self, heis1):
        cc = canonical_connection(heis1)
        assert cc.gamma == (cc.beta - cc.delta) * 2
        assert phi_compatible_torsion(heis1, cc.gamma) == cc.torsion

    def test_nt_identity_at_sphere_points(self, complex_h):
        from a3c.acms import SphereParam, sphere_structure

        for seed in ((1, 2, 0, 0), (2, 1, 1, 1)):
            a = SphereParam.from_pythagorean(*seed)
            T = phi_compatible_torsion(complex_h, gamma, a)
            assert nt_identity_residual(complex_h, sphere_structure(complex_h, a), T) == []


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_nabla_xi_phi(name):
    S = EXAMPLES[name]
    if not phi_compatible_exists(S):
        pytest.skip("no compatible connection")
    conn = phi_compatible_connection(S, gamma)
    assert nabla_xi_phi_residual(S, conn) == []


class TestCharacteristic:
    def test_heisenberg_closed_form(self, heis1):
        alpha, d = lam / 2, 0
        for i, j, k in CYCLIC:
            rest = eta_phi(heis1, j) + eta_phi(heis1, k) + heis1.eta123() * 2
            want = wedge(heis1.eta(i), heis1.d_eta(i)) + rest * ((d - alpha) * 2)
            assert characteristic_torsion(heis1, i) == want

    def test_nilpotent_three_closed_form(self, nil3):
        def theta(m):
            return one_form(7, 3 + m)

        for i, j, k in CYCLIC:
            twist = wedge(wedge(nil3.eta(j), theta(k + 1)) - wedge(nil3.eta(k), theta(j + 1)), theta(i + 1))
            assert characteristic_torsion(nil3, i) == wedge(nil3.eta(i), nil3.d_eta(i)) + twist

    def test_so3_collapse(self, so3):
        T = canonical_connection(so3).torsion
        assert T == so3.eta123() * (delta * -2)
        assert all(characteristic_torsion(so3, i) == T for i in range(3))

    @pytest.mark.parametrize("name", CANONICAL)
    def test_post_conditions(self, name):
        S = EXAMPLES[name]
        for i in range(3):
            assert characteristic_checks(S, i).ok

    def test_not_skew(self):
        with pytest.raises(NotSkew):
            characteristic_torsion(non_killing(), 0)

    def test_not_killing(self):
        # [xi_1, tau_a] = tau_a commutes with phi_1, so N_phi1 stays skew
        S = catalog.heisenberg(1)
        table = {k: dict(v) for k, v in S.geometry.brackets.items()}
        table.update({(0, a): {a: 1} for a in range(3, 7)})
        dilated = A3CStructure(LieFrameGeometry(S.geometry.frame, ConstantBrackets(7, table)), standard_phi(1))
        with pytest.raises(NotKilling, match="xi_1"):
            characteristic_torsion(dilated, 0)


class TestCanonical:
    def test_heisenberg(self, heis1):
        assert canonical_connection(heis1).torsion == eta_deta(heis1) - heis1.eta123() * (lam * 4)

    def test_nilpotent_three(self, nil3):
        cc = canonical_connection(nil3)
        assert cc.beta == -1
        assert cc.torsion == eta_deta(nil3) - nil3.eta123() * 2

    @pytest.mark.parametrize("name", CANONICAL)
    def test_derivative_laws(self, name):
        rep = canonical_checks(EXAMPLES[name])
        assert rep.ok, rep.failures()

    def test_real_heisenberg_not_canonical(self, real_h):
        with pytest.raises(NotCanonical):
            canonical_connection(real_h)

    def test_su2_edge_not_canonical(self, su2):
        with pytest.raises(NotCanonical, match="undetermined"):
            canonical_connection(su2)


class TestTorsionRelation:
    @pytest.mark.parametrize("name", ["heisenberg", "nilpotent_three_family", "so3_flat", "heisenberg_n2"])
    def test_residuals_vanish(self, name):
        res = torsion_relation_check(EXAMPLES[name])
        assert set(res) == {"T-T1", "T-T2", "T-T3", "3T"}
        assert all(r.is_zero for r in res.values())

    def test_direct_form_on_nilpotent_three(self, nil3):
        T = canonical_connection(nil3).torsion
        for i, j, k in CYCLIC:
            assert T - characteristic_torsion(nil3, i) == eta_phi(nil3, j) + eta_phi(nil3, k)


class TestSasakiClosedForms:
    @pytest.mark.parametrize("name", sorted(SASAKI))
    def test_all_residuals_vanish(self, name):
        rep = sasaki_closed_forms(SASAKI[name])
        assert len(rep) == 10
        assert rep.ok, rep.failures()

    def test_deformed_parameters(self):
        S = SASAKI["heisenberg_s1_c2"]
        assert classify(S).three_alpha_delta_sasaki == (lam, 0)

    def test_not_sasaki(self, nil3):
        with pytest.raises(NotSasakiFamily):
            sasaki_closed_forms(nil3)

    def test_symbolic_model(self, model):
        alpha, d = param("alpha"), param("delta")
        T = canonical_connection(model).torsion
        assert T == eta_deta(model) + model.eta123() * ((d - alpha) * 8)


class TestRicci:
    @pytest.mark.parametrize("S", [catalog.heisenberg(1), catalog.heisenberg(2)], ids=["n1", "n2"])
    def test_closed_forms(self, S):
        rep = ricci_closed_forms(S)
        for cid in ("ricci.canonical", "ricci.levi_civita", "ricci.canonical_alt", "ricci.nabla_einstein_agrees"):
            assert rep[cid].passed

    def test_heisenberg_values(self, heis1):
        ric = ricci(canonical_connection(heis1).connection)
        assert ric(0, 0) == lam * lam * -8
        assert ric(3, 3) == lam * lam * -3

    def test_einstein_predicates(self, heis1):
        rep = ricci_closed_forms(heis1)
        assert rep["ricci.nabla_einstein"].status == "does-not-hold"
        assert rep["ricci.double_einstein"].status == "does-not-hold"

    def test_factorization(self):
        assert einstein_factorization().is_zero


class TestCone:
    def test_heisenberg(self, heis1):
        rep = cone_checks(heis1)
        assert [c.id for c in rep] == ["cone.S_equal", "cone.J1J2", "cone.J2J1", "cone.J_square"]
        assert rep.ok

    def test_rational_radius(self, heis1):
        assert cone_checks(heis1, rho=3).ok

    def test_parallel_rejected(self, so3):
        with pytest.raises(NonNegativeBeta):
            cone_checks(so3)

    def test_unknown_sign_rejected(self, nil3):
        S = h_deform(nil3, DeformParams(1, param("c")))
        with pytest.raises(NonNegativeBeta):
            cone_checks(S)

    def test_untwisted_third_structure_breaks_quaternion_relations(self, heis1):
        rep = cone_checks(heis1, literal=True)
        assert rep["cone.S_equal"].passed and rep["cone.J_square"].passed
        assert not rep["cone.J1J2"].passed

    def test_vertical_action(self, heis1):
        rho = param("rho", positive=True)
        J = cone_endomorphisms(heis1, rho)
        for i, s in zip(range(3), (1, 1, -1)):
            assert J[i].apply({0: rho}) == {i + 1: s}
        ident = Endo.identity(8)
        assert all(j @ j + ident == Endo.zero(8) for j in J)
