import pytest
from hypothesis import given
from hypothesis import strategies as st

from a3c.acms import fundamental_forms, horizontal_forms
from a3c.errors import DegreeMismatch, DegreeOverflow
from a3c.frame_alg import (
    Endo,
    KForm,
    Trilinear,
    basis_vector,
    contract,
    form_inner,
    hodge_star,
    one_form,
    phi_twist,
    volume,
    wedge,
)
from a3c.scalar import param
from strategies import forms

lam = param("lambda", positive=True)


def eta(i, dim=7):
    return one_form(dim, i)


class TestWedge:
    def test_odd_self_wedge_vanishes(self):
        assert wedge(eta(0), eta(0)).is_zero

    def test_basis_wedge(self):
        w = wedge(eta(1), eta(2))
        assert w == KForm.monomial(7, 1, 2)
        assert w.support() == [(1, 2)]

    def test_horizontal_square(self, heis1):
        PH = horizontal_forms(heis1)[0]
        # by hand: -(t1^t2 + t3^t4) squared = 2 t1^t2^t3^t4
        assert wedge(PH, PH) == KForm.monomial(7, 3, 4, 5, 6, coeff=2)

    def test_overflow(self):
        with pytest.raises(DegreeOverflow):
            wedge(KForm.monomial(3, 0, 1), KForm.monomial(3, 1, 2))

    def test_mismatched_dimensions(self):
        with pytest.raises(DegreeMismatch):
            wedge(eta(0, 7), eta(0, 11))


class TestContract:
    def test_reeb_contractions(self, heis1):
        Phi1 = fundamental_forms(heis1)[0]
        assert contract(basis_vector(1), Phi1) == -eta(2)
        assert contract(basis_vector(0), Phi1).is_zero
        assert contract(basis_vector(2), Phi1) == eta(1)

    def test_horizontal_part_has_no_vertical_slot(self, heis1):
        for PH in horizontal_forms(heis1):
            for i in range(3):
                assert contract(basis_vector(i), PH).is_zero

    def test_zero_form_rejected(self):
        with pytest.raises(DegreeMismatch):
            contract(basis_vector(0), KForm.scalar(7, 1))


class TestHodge:
    def test_vertical_volume(self):
        assert hodge_star(KForm.monomial(7, 0, 1, 2)) == KForm.monomial(7, 3, 4, 5, 6)

    @given(forms(dim=7))
    def test_involution_in_dimension_seven(self, a):
        assert hodge_star(hodge_star(a)) == a

    def test_sign_rule_in_even_dimension(self):
        a = KForm.monomial(4, 0)
        assert hodge_star(hodge_star(a)) == -a

    def test_orientation_flip(self):
        a = KForm.monomial(7, 0, 1, 2)
        assert hodge_star(a, orientation=-1) == -hodge_star(a)


class TestInner:
    def test_normalization(self):
        e = KForm.monomial(7, 0, 1, 2)
        assert form_inner(e, e) == 1

    def test_horizontal_forms_orthogonal(self, heis1):
        P = horizontal_forms(heis1)
        assert form_inner(P[0], P[1]).is_zero

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            form_inner(eta(0), KForm.monomial(7, 0, 1))


class TestTwist:
    def test_zero_endomorphism(self, heis1):
        dPhi = heis1.d(fundamental_forms(heis1)[0])
        assert phi_twist(dPhi, Endo.zero(7)).is_zero

    def test_twist_on_heisenberg(self, heis1):
        S = heis1
        Phi = fundamental_forms(S)
        alpha, delta = lam / 2, 0
        want = (wedge(eta(1), Phi[1]) + wedge(eta(2), Phi[2]) + S.eta123() * 2) * ((delta - alpha) * 2)
        assert phi_twist(S.d(Phi[0]), S.phi[0]) == want

    def test_twist_vanishes_on_closed_forms(self, so3):
        for i in range(3):
            dPhi = so3.d(fundamental_forms(so3)[i])
            assert dPhi.is_zero
            assert phi_twist(dPhi, so3.phi[i]).is_zero


class TestTensors:
    def test_trilinear_antisymmetry(self):
        t = Trilinear(5, {(0, 1, 2): 3, (2, 1, 4): 1})
        assert t(1, 0, 2) == -3
        assert t(1, 2, 4) == -1
        assert t(3, 3, 0).is_zero

    def test_endo_columns(self):
        E = Endo.from_matrix([[0, -1], [1, 0]])
        assert E.column(0) == {1: 1}
        assert E.entry(0, 1) == -1
        assert (E @ E) == Endo.identity(2) * -1


monomials = st.integers(0, 3).flatmap(lambda k: forms(dim=7, degree=k))


@given(monomials, monomials, monomials)
def test_wedge_associative(a, b, c):
    if a.degree + b.degree + c.degree > 7:
        return
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@given(monomials, monomials)
def test_wedge_graded_commutative(a, b):
    if a.degree + b.degree > 7:
        return
    sign = -1 if (a.degree * b.degree) % 2 else 1
    assert wedge(a, b) == wedge(b, a) * sign


@given(st.integers(0, 6), st.integers(1, 3).flatmap(lambda k: forms(dim=7, degree=k)),
       st.integers(1, 3).flatmap(lambda k: forms(dim=7, degree=k)))
def test_contraction_is_an_antiderivation(v, a, b):
    if a.degree + b.degree > 7:
        return
    x = basis_vector(v)
    lhs = contract(x, wedge(a, b))
    rhs = wedge(contract(x, a), b) + wedge(a, contract(x, b)) * (-1) ** a.degree
    assert lhs == rhs


@given(st.integers(0, 7).flatmap(lambda k: st.tuples(forms(dim=7, degree=k), forms(dim=7, degree=k))))
def test_hodge_star_is_an_isometry(pair):
    a, b = pair
    assert wedge(a, hodge_star(b)) == volume(7) * form_inner(a, b)
