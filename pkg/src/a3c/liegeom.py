"""Left-invariant differential geometry in an orthonormal frame.

Everything here is first order in structure constants except curvature.  A
geometry with pointwise brackets (a bracket oracle evaluated at a point) must
be frozen with :meth:`LieFrameGeometry.at` before use; the frozen snapshot
supports exterior derivatives, Lie derivatives and connection coefficients at
that point but refuses curvature and covariant derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

from .errors import DegreeOverflow, PointwiseUnsupported
from .frame_alg import (
    Bilinear,
    Endo,
    FrameSpace,
    KForm,
    SymBilinear,
    Trilinear,
    basis_vector,
    vadd,
    vscale,
    wedge,
)
from .scalar import ZERO, Expr, as_expr


class ConstantBrackets:
    """Structure constants ``[e_a, e_b] = sum_c C[a, b][c] e_c``."""

    def __init__(self, dim: int, table=None):
        self.dim = dim
        data: dict[tuple, dict] = {}
        for (a, b), v in (table or {}).items():
            if not (0 <= a < dim and 0 <= b < dim):
                raise IndexError(f"bracket index out of range: {(a, b)}")
            if isinstance(v, Sequence) and not isinstance(v, dict):
                v = {c: x for c, x in enumerate(v)}
            v = {c: as_expr(x) for c, x in v.items() if not as_expr(x).is_zero}
            if any(not 0 <= c < dim for c in v):
                raise IndexError(f"bracket value index out of range at {(a, b)}")
            if a == b:
                if v:
                    raise ValueError(f"[e_{a}, e_{a}] must vanish")
                continue
            key, sign = ((a, b), 1) if a < b else ((b, a), -1)
            prev = data.get(key, {})
            data[key] = vadd(prev, v, sign)
        self._table = {k: v for k, v in data.items() if v}

    def bracket(self, a: int, b: int) -> dict:
        if a < b:
            return self._table.get((a, b), {})
        if a > b:
            v = self._table.get((b, a))
            return vscale(v, -1) if v else {}
        return {}

    def items(self):
        return sorted(self._table.items())

    def constant(self, a: int, b: int, c: int) -> Expr:
        return self.bracket(a, b).get(c, ZERO)

    def __eq__(self, other):
        if not isinstance(other, ConstantBrackets):
            return NotImplemented
        if self.dim != other.dim or set(self._table) != set(other._table):
            return False
        return all(not vadd(v, other._table[k], -1) for k, v in self._table.items())

    __hash__ = None


class PointwiseBrackets:
    """Bracket oracle ``(point, a, b) -> coefficient vector`` of a frame-constant structure."""

    def __init__(self, dim: int, oracle: Callable):
        self.dim = dim
        self.oracle = oracle

    def at(self, point) -> ConstantBrackets:
        table = {}
        for a, b in combinations(range(self.dim), 2):
            v = self.oracle(point, a, b)
            w = self.oracle(point, b, a)
            v = {c: as_expr(x) for c, x in (enumerate(v) if not isinstance(v, dict) else v.items())}
            w = {c: as_expr(x) for c, x in (enumerate(w) if not isinstance(w, dict) else w.items())}
            if vadd(v, w):
                raise ValueError(f"oracle is not antisymmetric at {(a, b)}")
            table[(a, b)] = v
        return ConstantBrackets(self.dim, table)


@dataclass
class LieFrameGeometry:
    """Orthonormal frame plus brackets; the metric is the identity in this frame."""

    frame: FrameSpace
    brackets: object  # ConstantBrackets or PointwiseBrackets
    point: object = None  # set on snapshots of pointwise geometries
    _de: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.brackets.dim != self.frame.dim:
            raise ValueError("bracket dimension differs from frame dimension")

    @property
    def dim(self) -> int:
        return self.frame.dim

    @property
    def is_pointwise(self) -> bool:
        return isinstance(self.brackets, PointwiseBrackets)

    @property
    def is_snapshot(self) -> bool:
        return self.point is not None

    def at(self, point) -> "LieFrameGeometry":
        if not self.is_pointwise:
            return self
        return LieFrameGeometry(self.frame, self.brackets.at(point), point=point)

    def _table(self) -> ConstantBrackets:
        if self.is_pointwise:
            raise ValueError("pointwise geometry: freeze it at a point with .at(point) first")
        return self.brackets

    def bracket(self, a: int, b: int) -> dict:
        return self._table().bracket(a, b)

    def bracket_vectors(self, u: dict, v: dict) -> dict:
        table = self._table()
        out: dict = {}
        for a, x in u.items():
            for b, y in v.items():
                if a != b:
                    w = table.bracket(a, b)
                    if w:
                        out = vadd(out, w, x * y)
        return out

    def constant(self, a: int, b: int, c: int) -> Expr:
        return self._table().constant(a, b, c)

    def d_basis(self, c: int) -> KForm:
        """``d e^c = -sum_{a<b} C_ab^c e^a ^ e^b``."""
        if c not in self._de:
            table = self._table()
            coeffs = {}
            for (a, b), v in table.items():
                x = v.get(c)
                if x is not None:
                    coeffs[(a, b)] = -x
            self._de[c] = KForm(self.dim, 2, coeffs)
        return self._de[c]


# Jacobi

@dataclass(frozen=True)
class JacobiResult:
    ok: bool
    triple: tuple | None = None
    residual: dict | None = None


def jacobi_check(B) -> JacobiResult:
    """Check the cyclic sum of double brackets on all basis triples."""
    table = B.brackets if isinstance(B, LieFrameGeometry) else B
    n = table.dim

    def br(u, v):
        out = {}
        for a, x in u.items():
            for b, y in v.items():
                w = table.bracket(a, b)
                if w:
                    out = vadd(out, w, x * y)
        return out

    for a, b, c in combinations(range(n), 3):
        ea, eb, ec = basis_vector(a), basis_vector(b), basis_vector(c)
        total = vadd(vadd(br(br(ea, eb), ec), br(br(eb, ec), ea)), br(br(ec, ea), eb))
        if total:
            return JacobiResult(False, (a, b, c), total)
    return JacobiResult(True)


# exterior derivative

def ce_differential(G: LieFrameGeometry, a: KForm) -> KForm:
    """Chevalley-Eilenberg differential of a frame-constant form."""
    if a.degree == a.dim:
        raise DegreeOverflow("the differential of a top-degree form has no degree to live in")
    if a.degree == 0 or a.is_zero:
        return KForm(a.dim, a.degree + 1, {})
    total = KForm(a.dim, a.degree + 1, {})
    for I, coeff in a.items():
        for m, i in enumerate(I):
            de = G.d_basis(i)
            if de.is_zero:
                continue
            left = KForm.monomial(a.dim, *I[:m]) if m else None
            right = KForm.monomial(a.dim, *I[m + 1:]) if m + 1 < len(I) else None
            term = de
            if left is not None:
                term = wedge(left, term)
            if right is not None:
                term = wedge(term, right)
            total = total + term * (coeff if m % 2 == 0 else -coeff)
    return total


def ce_differential_direct(G: LieFrameGeometry, a: KForm) -> KForm:
    """Same differential evaluated from ``sum_{i<j} (-1)^{i+j} a([X_i,X_j], ...)``."""
    k = a.degree
    out = {}
    for J in combinations(range(a.dim), k + 1):
        total = ZERO
        for i, j in combinations(range(k + 1), 2):
            rest = [J[m] for m in range(k + 1) if m not in (i, j)]
            br = G.bracket(J[i], J[j])
            for c, x in br.items():
                v = a.coeff([c] + rest)
                if not v.is_zero:
                    term = x * v
                    total = total + (term if (i + j) % 2 == 0 else -term)
        if not total.is_zero:
            out[J] = total
    return KForm(a.dim, k + 1, out)


# connections

class Connection:
    """Coefficients ``nabla_{e_a} e_b = sum_c Gamma[a, b][c] e_c``."""

    def __init__(self, geometry: LieFrameGeometry, gamma: dict):
        self.geometry = geometry
        self._g = {k: v for k, v in gamma.items() if v}

    @property
    def dim(self) -> int:
        return self.geometry.dim

    def nabla(self, a: int, b: int) -> dict:
        return self._g.get((a, b), {})

    def coeff(self, a: int, b: int, c: int) -> Expr:
        return self._g.get((a, b), {}).get(c, ZERO)

    def items(self):
        return sorted(self._g.items())

    def nabla_vectors(self, x: dict, v: dict) -> dict:
        """``nabla_X V`` for frame-constant ``X`` and ``V``."""
        out: dict = {}
        for a, ca in x.items():
            for b, cb in v.items():
                w = self._g.get((a, b))
                if w:
                    out = vadd(out, w, ca * cb)
        return out

    def torsion_tensor(self) -> Trilinear:
        """``T(a, b, c) = Gamma_ab^c - Gamma_ba^c - C_ab^c``."""
        G = self.geometry
        n = self.dim

        def t(a, b, c):
            return self.coeff(a, b, c) - self.coeff(b, a, c) - G.constant(a, b, c)

        return Trilinear.from_function(n, t)

    def torsion(self):
        """The torsion as a 3-form when totally skew, otherwise as a Trilinear."""
        t = self.torsion_tensor()
        return t.to_form() if t.is_skew() else t

    def metricity_violation(self):
        for (a, b), v in self._g.items():
            for c, x in v.items():
                if x != -self.coeff(a, c, b):
                    return (a, b, c)
            for c in range(self.dim):
                if c not in v and not self.coeff(a, c, b).is_zero:
                    return (a, b, c)
        return None

    def is_metric(self) -> bool:
        return self.metricity_violation() is None

    def __sub__(self, other: "Connection") -> dict:
        keys = set(self._g) | set(other._g)
        out = {k: vadd(self.nabla(*k), other.nabla(*k), -1) for k in keys}
        return {k: v for k, v in out.items() if v}


def levi_civita(G: LieFrameGeometry, point=None) -> Connection:
    """Koszul formula ``Gamma_ab^c = (C_ab^c - C_bc^a + C_ca^b) / 2``."""
    if point is not None:
        G = G.at(point)
    gamma: dict[tuple, dict] = {}

    def add(a, b, c, x):
        slot = gamma.setdefault((a, b), {})
        slot[c] = slot.get(c, ZERO) + x

    for (x, y), v in G._table().items():
        for z, val in v.items():
            half = val / 2
            for (p, q), s in (((x, y), half), ((y, x), -half)):
                add(p, q, z, s)      # C_pq^z
                add(z, p, q, -s)     # -C_{b c}^{a} with (b, c, a) = (p, q, z)
                add(q, z, p, s)      # C_{c a}^{b} with (c, a, b) = (p, q, z)
    gamma = {k: {c: x for c, x in v.items() if not x.is_zero} for k, v in gamma.items()}
    return Connection(G, gamma)


def connection_from_torsion(G: LieFrameGeometry, T: KForm, point=None) -> Connection:
    """Metric connection ``nabla = nabla^g + T/2`` with totally skew torsion ``T``."""
    lc = levi_civita(G, point)
    gamma = {k: dict(v) for k, v in lc.items()}
    for (i, j, k), v in T.items():
        half = v / 2
        for (a, b, c), s in (((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1),
                             ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1)):
            slot = gamma.setdefault((a, b), {})
            slot[c] = slot.get(c, ZERO) + (half if s > 0 else -half)
    gamma = {k: {c: x for c, x in v.items() if not x.is_zero} for k, v in gamma.items()}
    return Connection(lc.geometry, gamma)


# Lie derivatives

def _as_vector(v) -> dict:
    return basis_vector(v) if isinstance(v, int) else v


def lie_derivative_metric(G: LieFrameGeometry, xi) -> SymBilinear:
    """``(L_xi g)(e_a, e_b) = -g([xi, e_a], e_b) - g(e_a, [xi, e_b])``."""
    x = _as_vector(xi)
    n = G.dim
    cols = [G.bracket_vectors(x, basis_vector(a)) for a in range(n)]
    out = {}
    for a in range(n):
        for b in range(a, n):
            v = -cols[a].get(b, ZERO) - cols[b].get(a, ZERO)
            if not v.is_zero:
                out[(a, b)] = v
    return SymBilinear.from_upper(n, out)


def lie_derivative_endo(G: LieFrameGeometry, xi, phi: Endo) -> Endo:
    """``(L_xi phi) e_a = [xi, phi e_a] - phi [xi, e_a]``."""
    x = _as_vector(xi)
    cols = {}
    for a in range(G.dim):
        v = vadd(G.bracket_vectors(x, phi.column(a)), phi.apply(G.bracket_vectors(x, basis_vector(a))), -1)
        if v:
            cols[a] = v
    return Endo(G.dim, cols)


def lie_derivative_form(G: LieFrameGeometry, xi, a: KForm) -> KForm:
    """Cartan formula ``L_xi = d i_xi + i_xi d`` on frame-constant forms."""
    from .frame_alg import contract

    x = _as_vector(xi)
    out = contract(x, ce_differential(G, a))
    if a.degree > 0:
        out = out + ce_differential(G, contract(x, a))
    return out


# covariant derivatives

def _require_constant(conn: Connection):
    if conn.geometry.is_snapshot:
        raise PointwiseUnsupported("covariant derivatives need constant brackets")


def covariant_derivative(conn: Connection, t):
    """``[nabla_{e_a} t for a in frame]`` for a frame-constant tensor ``t``.

    Supported kinds: sparse vectors, KForm, Endo, Bilinear and Trilinear.
    """
    _require_constant(conn)
    n = conn.dim
    if isinstance(t, dict):
        return [conn.nabla_vectors(basis_vector(a), t) for a in range(n)]
    if isinstance(t, KForm):
        return [_nabla_form(conn, a, t) for a in range(n)]
    if isinstance(t, Endo):
        out = []
        for a in range(n):
            cols = {}
            for b in range(n):
                v = vadd(conn.nabla_vectors(basis_vector(a), t.column(b)), t.apply(conn.nabla(a, b)), -1)
                if v:
                    cols[b] = v
            out.append(Endo(n, cols))
        return out
    if isinstance(t, Bilinear):
        out = []
        for a in range(n):
            coeffs = {}
            for b in range(n):
                for c in range(n):
                    v = -t.evaluate(conn.nabla(a, b), basis_vector(c)) - t.evaluate(basis_vector(b), conn.nabla(a, c))
                    if not v.is_zero:
                        coeffs[(b, c)] = v
            out.append(Bilinear(n, coeffs))
        return out
    if isinstance(t, Trilinear):
        out = []
        for a in range(n):
            def f(b, c, d, a=a):
                eb, ec, ed = basis_vector(b), basis_vector(c), basis_vector(d)
                return -(t.evaluate(conn.nabla(a, b), ec, ed) + t.evaluate(eb, conn.nabla(a, c), ed)
                         + t.evaluate(eb, ec, conn.nabla(a, d)))
            out.append(Trilinear.from_function(n, f))
        return out
    raise TypeError(f"unsupported tensor kind {type(t).__name__}")


def _nabla_dual(conn: Connection, a: int, c: int) -> KForm:
    """``nabla_{e_a} e^c = -sum_b Gamma_ab^c e^b``."""
    n = conn.dim
    coeffs = {}
    for b in range(n):
        x = conn.coeff(a, b, c)
        if not x.is_zero:
            coeffs[(b,)] = -x
    return KForm(n, 1, coeffs)


def _nabla_form(conn: Connection, a: int, t: KForm) -> KForm:
    n = conn.dim
    duals = {}
    total = KForm(n, t.degree, {})
    for I, coeff in t.items():
        for m, i in enumerate(I):
            if i not in duals:
                duals[i] = _nabla_dual(conn, a, i)
            d = duals[i]
            if d.is_zero:
                continue
            term = d
            if m:
                term = wedge(KForm.monomial(n, *I[:m]), term)
            if m + 1 < len(I):
                term = wedge(term, KForm.monomial(n, *I[m + 1:]))
            total = total + term * coeff
    return total


# curvature

class Curvature:
    """``R(e_a, e_b) e_c`` for ``a < b``, as sparse vectors."""

    def __init__(self, dim: int, table: dict):
        self.dim = dim
        self._t = table

    def __call__(self, a: int, b: int, c: int) -> dict:
        if a == b:
            return {}
        if a < b:
            return self._t.get((a, b, c), {})
        v = self._t.get((b, a, c))
        return vscale(v, -1) if v else {}

    def items(self):
        return sorted(self._t.items())

    @property
    def is_zero(self) -> bool:
        return not self._t


def curvature(conn: Connection) -> Curvature:
    """``R(a,b)c = nabla_a nabla_b e_c - nabla_b nabla_a e_c - nabla_[a,b] e_c``."""
    _require_constant(conn)
    G = conn.geometry
    n = conn.dim
    table = {}
    for a, b in combinations(range(n), 2):
        ea, eb = basis_vector(a), basis_vector(b)
        ab = G.bracket(a, b)
        for c in range(n):
            v = conn.nabla_vectors(ea, conn.nabla(b, c))
            v = vadd(v, conn.nabla_vectors(eb, conn.nabla(a, c)), -1)
            if ab:
                v = vadd(v, conn.nabla_vectors(ab, basis_vector(c)), -1)
            if v:
                table[(a, b, c)] = v
    return Curvature(n, table)


def ricci(conn: Connection, R: Curvature | None = None) -> Bilinear:
    """``Ric(X, Y) = sum_c g(R(e_c, X) Y, e_c)``; a SymBilinear when symmetric."""
    R = R if R is not None else curvature(conn)
    n = conn.dim
    out = {}
    for a in range(n):
        for b in range(n):
            total = ZERO
            for c in range(n):
                x = R(c, a, b).get(c)
                if x is not None:
                    total = total + x
            if not total.is_zero:
                out[(a, b)] = total
    ric = Bilinear(n, out)
    return SymBilinear(n, out) if ric.is_symmetric() else ric
