"""H-homothetic deformations realized as rescalings of the orthonormal frame.

A deformation with parameters ``(a, b, c)``, ``c^2 = a + b``, rescales the
metric by ``a`` on H and by ``c^2`` on V.  Writing ``a = s^2``, the vectors
``xi_i / c`` and ``tau / s`` form an orthonormal frame of the new metric, so
the deformed structure is again an identity-metric structure, with the same
endomorphism matrices and rescaled structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .acms import A3CStructure
from .errors import InvalidParams, NotRationallyRealizable, WrongSignProduct
from .liegeom import ConstantBrackets, LieFrameGeometry, PointwiseBrackets
from .scalar import Expr, as_expr, rational_sqrt


@dataclass(frozen=True)
class DeformParams:
    s: Expr
    c: Expr

    def __init__(self, s, c):
        s, c = as_expr(s), as_expr(c)
        if s.is_zero or c.is_zero:
            raise InvalidParams("s and c must be nonzero")
        if s.is_constant and s.as_fraction() < 0:
            raise InvalidParams("s is the positive square root of a")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "c", c)

    @property
    def a(self) -> Expr:
        return self.s * self.s

    @property
    def b(self) -> Expr:
        return self.c * self.c - self.a

    @classmethod
    def identity(cls) -> "DeformParams":
        return cls(1, 1)


def _scales(dim: int, p: DeformParams) -> list:
    return [p.c if a < 3 else p.s for a in range(dim)]


def _rescale_table(table: ConstantBrackets, L) -> ConstantBrackets:
    out = {}
    for (a, b), v in table.items():
        out[(a, b)] = {c: x * L[c] / (L[a] * L[b]) for c, x in v.items()}
    return ConstantBrackets(table.dim, out)


def h_deform(S: A3CStructure, p: DeformParams) -> A3CStructure:
    """``[e'_a, e'_b] = sum_c C_ab^c L_c / (L_a L_b) e'_c`` with ``e'_a = e_a / L_a``."""
    G = S.geometry
    L = _scales(S.dim, p)
    if G.is_pointwise:
        inner = G.brackets

        def oracle(point, a, b):
            v = inner.oracle(point, a, b)
            items = v.items() if isinstance(v, dict) else enumerate(v)
            return {c: as_expr(x) * L[c] / (L[a] * L[b]) for c, x in items}

        brackets = PointwiseBrackets(S.dim, oracle)
    else:
        brackets = _rescale_table(G.brackets, L)
    name = f"{S.name}_deformed" if S.name else ""
    return A3CStructure(LieFrameGeometry(G.frame, brackets), S.phi, name)


def deform_parameters(alpha, delta, p: DeformParams) -> tuple[Expr, Expr]:
    """``(alpha c / a, delta / c)``."""
    return as_expr(alpha) * p.c / p.a, as_expr(delta) / p.c


def _ratio(alpha, delta) -> Fraction:
    alpha, delta = Fraction(alpha), Fraction(delta)
    if alpha == 0:
        raise WrongSignProduct("alpha must be nonzero")
    return delta / alpha


def to_3_alpha_sasaki(alpha, delta) -> DeformParams:
    """Parameters with ``a = 1`` and ``c = sqrt(delta/alpha)`` making ``alpha' = delta'``."""
    r = _ratio(alpha, delta)
    if r <= 0:
        raise WrongSignProduct(f"alpha delta = {Fraction(alpha) * Fraction(delta)} is not positive")
    c = rational_sqrt(r)
    if c is None:
        raise NotRationallyRealizable(f"delta/alpha = {r} is not the square of a rational")
    return DeformParams(1, c)


def to_neg_pair(alpha, delta) -> DeformParams:
    """Parameters with ``a = 1`` and ``c = sqrt(-delta/alpha)`` making ``alpha' = -delta'``."""
    r = _ratio(alpha, delta)
    if r >= 0:
        raise WrongSignProduct(f"alpha delta = {Fraction(alpha) * Fraction(delta)} is not negative")
    c = rational_sqrt(-r)
    if c is None:
        raise NotRationallyRealizable(f"-delta/alpha = {-r} is not the square of a rational")
    return DeformParams(1, c)


# the one-parameter family a > 0, b = 1 - a, c = 1 of a 7-dimensional 3-Sasaki manifold

@dataclass(frozen=True)
class FamilyRow:
    a: Fraction
    alpha: Fraction
    delta: Fraction
    beta: Fraction
    three_sasaki: bool
    parallel: bool
    einstein: bool
    nabla_einstein: bool


def three_sasaki_family_row(a, n: int = 1) -> FamilyRow:
    """Scalar predicates of the deformed structure with ``alpha = 1/a``, ``delta = 1``."""
    a = Fraction(a)
    alpha, delta = Fraction(1) / a, Fraction(1)
    beta = 2 * (delta - 2 * alpha)
    return FamilyRow(
        a=a,
        alpha=alpha,
        delta=delta,
        beta=beta,
        three_sasaki=alpha == delta,
        parallel=beta == 0,
        einstein=(alpha - delta) * ((2 * n + 3) * alpha - delta) == 0,
        nabla_einstein=delta * (2 - n) == 5 * alpha,
    )
