from importlib.resources import files

import pytest
from hypothesis import given
from hypothesis import strategies as st

from a3c import catalog
from a3c.acms import classify
from a3c.dsl import canonical, from_structure, parse, render, to_structure
from a3c.errors import (
    A3CError,
    DslSyntaxError,
    DuplicateFrameName,
    IndexOutOfRange,
    InvalidStructure,
    JacobiFailure,
)
from a3c.scalar import param

HEIS = (files("a3c") / "data" / "heisenberg7.alg").read_text()

ABELIAN = """algebra flat {
  params: ;
  dim: 7;
  frame: a b c d e f g;
  brackets: ;
  structure: standard;
}
"""


def replace(old, new, text=HEIS):
    assert old in text
    return text.replace(old, new, 1)


def location(text):
    with pytest.raises(DslSyntaxError) as info:
        parse(text)
    return info.value


class TestRoundTrip:
    @pytest.mark.parametrize("name", catalog.EXAMPLES[:5])
    @pytest.mark.parametrize("standard", [True, False])
    def test_catalog(self, name, standard):
        doc = from_structure(catalog.build(name), standard=standard)
        assert parse(render(doc)) == doc

    def test_canonical_is_idempotent(self):
        doc = parse(HEIS)
        assert canonical(canonical(doc)) == canonical(doc)
        assert parse(render(doc)) == doc

    def test_explicit_matrices_give_the_same_structure(self, heis1):
        doc = from_structure(heis1, standard=False)
        assert "explicit" in render(doc)
        S = to_structure(doc)
        assert S.phi == heis1.phi

    def test_positive_params_survive(self):
        doc = parse(HEIS)
        assert doc.params == (("lambda", True),)
        r = classify(to_structure(doc))
        assert r.three_alpha_delta_sasaki == (param("lambda") / 2, 0)


class TestAccepts:
    def test_empty_brackets_give_an_abelian_algebra(self):
        S = to_structure(parse(ABELIAN))
        assert not dict(S.geometry.brackets.items())
        assert classify(S).parallel

    def test_comments_and_whitespace(self):
        text = "# leading comment\n" + replace("dim: 7;", "dim:   7 ;  # seven\n")
        assert parse(text) == parse(HEIS)

    def test_reversed_bracket_is_negated(self):
        text = replace("[tau2, tau4] = -lambda*xi2;", "[tau4, tau2] = lambda*xi2;")
        assert to_structure(parse(text)).geometry.bracket(4, 6) == to_structure(parse(HEIS)).geometry.bracket(4, 6)

    def test_rational_coefficients(self):
        text = replace("[tau1, tau2] = lambda*xi1;", "[tau1, tau2] = (2*lambda)/2*xi1 + 0*xi2;")
        assert to_structure(parse(text)).geometry.bracket(3, 4) == {0: param("lambda")}


class TestRejects:
    def test_unknown_frame_name(self):
        err = location(replace("[tau1, tau2] = lambda*xi1;", "[tau1, tau9] = lambda*xi1;"))
        assert "tau9" in err.message
        assert (err.line, err.col) == (7, 12)

    def test_unknown_name_in_value(self):
        err = location(replace("lambda*xi1;", "mu*xi1;"))
        assert "mu" in err.message and err.line == 7

    def test_duplicate_frame_name(self):
        with pytest.raises(DuplicateFrameName):
            parse(replace("tau3 tau4;", "tau3 tau3;"))

    def test_dimension_mismatch(self):
        with pytest.raises(IndexOutOfRange):
            parse(replace("dim: 7;", "dim: 11;"))

    def test_bad_structure_dimension(self):
        text = ABELIAN.replace("dim: 7;", "dim: 5;").replace("a b c d e f g", "a b c d e")
        with pytest.raises(IndexOutOfRange):
            parse(text)

    def test_jacobi_failure(self):
        text = replace("[tau3, tau4] = lambda*xi1;", "[tau3, tau4] = lambda*xi1;\n    [xi1, tau1] = tau2;")
        with pytest.raises(JacobiFailure, match="Jacobi"):
            parse(text)

    def test_repeated_bracket(self):
        err = location(replace("[tau3, tau4] = lambda*xi1;", "[tau3, tau4] = lambda*xi1;\n    [tau4, tau3] = xi1;"))
        assert "twice" in err.message

    def test_scalar_value(self):
        err = location(replace("= lambda*xi1;", "= lambda;"))
        assert "combination" in err.message

    def test_missing_semicolon(self):
        err = location(replace("dim: 7;", "dim: 7"))
        assert err.line == 5

    def test_trailing_text(self):
        err = location(HEIS + "extra")
        assert "end of input" in err.message

    def test_invalid_explicit_structure(self, heis1):
        doc = from_structure(heis1, standard=False)
        phi1, phi2, phi3 = doc.structure
        swapped = render(type(doc)(doc.name, doc.params, doc.dim, doc.frame, doc.brackets, (phi2, phi1, phi3)))
        with pytest.raises(InvalidStructure):
            to_structure(parse(swapped))


TOKENS = ["algebra", "x", "{", "}", "params", "dim", "frame", "brackets", "structure", "standard",
          "explicit", ":", ";", "[", "]", ",", "=", "*", "+", "-", "/", "(", ")", "7", "0", "> 0", "#", "\n",
          "lambda", "xi1", "tau1", "phi1"]


@given(st.text(max_size=200))
def test_parser_is_total_on_arbitrary_text(text):
    try:
        parse(text)
    except DslSyntaxError as exc:
        assert exc.line >= 1 and exc.col >= 1
    except A3CError:
        pass


@given(st.lists(st.sampled_from(TOKENS), max_size=60))
def test_parser_is_total_on_token_soup(tokens):
    try:
        parse(" ".join(tokens))
    except DslSyntaxError as exc:
        assert exc.line >= 1 and exc.col >= 1
    except A3CError:
        pass


@given(st.integers(0, len(HEIS) - 1), st.sampled_from(["", ";", "[", "*", "x", "(", "\n"]))
def test_parser_is_total_on_mutations(pos, insert):
    text = HEIS[:pos] + insert + HEIS[pos + 1:]
    try:
        parse(text)
    except DslSyntaxError as exc:
        assert exc.line >= 1 and exc.col >= 1
    except A3CError:
        pass


def test_deep_nesting_is_a_located_error():
    text = replace("lambda*xi1;", "(" * 5000 + "lambda" + ")" * 5000 + "*xi1;")
    err = location(text)
    assert err.line >= 1
