"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from a3c.frame_alg import KForm
from a3c.scalar import Expr, param

NAMES = ("alpha", "delta", "gamma")

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def _leaf():
    return st.one_of(small_fractions.map(Expr), st.sampled_from(NAMES).map(param))


def _combine(children):
    ops = st.sampled_from(("add", "sub", "mul", "div"))

    def apply(op, a, b):
        if op == "add":
            return a + b
        if op == "sub":
            return a - b
        if op == "mul":
            return a * b
        return a if b.is_zero else a / b

    return st.builds(apply, ops, children, children)


exprs = st.recursive(_leaf(), _combine, max_leaves=6)

assignments = st.fixed_dictionaries({name: small_fractions for name in NAMES})


@st.composite
def forms(draw, dim=7, degree=None, coeffs=None):
    """A random k-form on ``dim`` with a few monomials."""
    from itertools import combinations

    k = draw(st.integers(0, dim)) if degree is None else degree
    pool = list(combinations(range(dim), k))
    keys = draw(st.lists(st.sampled_from(pool), max_size=4, unique=True))
    values = coeffs or st.integers(-3, 3)
    return KForm(dim, k, {key: draw(values) for key in keys})
