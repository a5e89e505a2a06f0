from fractions import Fraction
from importlib.resources import files

import pytest

from a3c import catalog
from a3c.acms import classify, validate_structure
from a3c.dsl import from_structure, parse, to_structure
from a3c.errors import InvalidN
from a3c.liegeom import jacobi_check
from a3c.scalar import param

lam = param("lambda", positive=True)

DATA = files("a3c") / "data"
SHIPPED = {
    "heisenberg7": catalog.heisenberg(1),
    "heisenberg11": catalog.heisenberg(2),
    "so3_flat7": catalog.so3_flat(1),
    "nilpotent_three7": catalog.nilpotent_three_family(1),
    "real_heisenberg": catalog.real_heisenberg_product(1),
    "complex_heisenberg": catalog.complex_heisenberg_product(1),
    "su2_edge": catalog.su2_edge(),
}


@pytest.mark.parametrize("stem", sorted(SHIPPED))
def test_shipped_file_matches_builder(stem):
    doc = parse((DATA / f"{stem}.alg").read_text())
    assert doc == from_structure(SHIPPED[stem], name=stem)
    S = to_structure(doc)
    assert S.geometry.brackets.items() == SHIPPED[stem].geometry.brackets.items()


def test_every_shipped_file_is_listed():
    assert sorted(p.name for p in DATA.iterdir() if p.name.endswith(".alg")) == sorted(f"{s}.alg" for s in SHIPPED)


@pytest.mark.parametrize("name", catalog.EXAMPLES[:5])
@pytest.mark.parametrize("n", [1, 2])
def test_valid_and_jacobi(name, n):
    S = catalog.build(name, n)
    assert validate_structure(S).ok
    assert jacobi_check(S.geometry).ok


@pytest.mark.parametrize("name", catalog.EXAMPLES[:5])
def test_invalid_n(name):
    with pytest.raises(InvalidN):
        catalog.build(name, 0)


def test_unknown_name():
    with pytest.raises(KeyError):
        catalog.build("octonions")


def test_heisenberg_table(heis1):
    b = heis1.geometry.bracket
    # tau_m is frame index m + 2
    assert b(3, 4) == {0: lam} and b(3, 5) == {1: lam} and b(3, 6) == {2: lam}
    assert b(5, 6) == {0: lam} and b(6, 4) == {1: lam} and b(4, 5) == {2: lam}


def test_nilpotent_three_table(nil3):
    b = nil3.geometry.bracket
    assert b(3, 4) == {0: 1} and b(3, 5) == {1: 1} and b(3, 6) == {2: 1}
    assert b(4, 5) == {} and b(5, 6) == {}


def test_complex_heisenberg_table(complex_h):
    b = complex_h.geometry.bracket
    assert b(3, 4) == b(5, 6) == {0: 1}
    assert b(3, 5) == b(6, 4) == {1: 1}


def test_adapted_frame(heis1):
    # e5 = phi_1 e4, e6 = phi_2 e4, e7 = phi_3 e4
    assert [heis1.phi[i].column(3) for i in range(3)] == [{4: 1}, {5: 1}, {6: 1}]


def test_heisenberg_parameter_override():
    S = catalog.heisenberg(1, 3)
    assert classify(S).three_alpha_delta_sasaki == (Fraction(3, 2), 0)


def test_su2_edge_is_flagged(su2):
    assert su2.n == 0
    assert classify(su2).beta_undetermined


def test_s7_is_pointwise():
    S = catalog.build("s7_cartan_schouten")
    assert S.geometry.is_pointwise


class TestPinnedClassification:
    def test_heisenberg(self):
        for n in (1, 2):
            r = classify(catalog.heisenberg(n))
            assert r.three_alpha_delta_sasaki == (lam / 2, 0)

    def test_so3(self, so3):
        r = classify(so3)
        assert r.three_delta_cosymplectic == param("delta") and r.parallel

    def test_nilpotent_three(self, nil3):
        r = classify(nil3)
        assert r.canonical and r.reeb_killing_beta == -1
        assert r.three_alpha_delta_sasaki is None

    @pytest.mark.parametrize("fixture", ["real_h", "complex_h"])
    def test_products(self, fixture, request):
        r = classify(request.getfixturevalue(fixture))
        assert r.phi_compatible_exists[0]
        assert not r.canonical and not r.hypernormal
