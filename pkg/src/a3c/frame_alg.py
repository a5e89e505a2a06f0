"""Exterior and tensor algebra over an ordered orthonormal frame.

Conventions: a :class:`KForm` stores its coefficients on strictly increasing
index tuples, and the basis monomial ``e^I`` evaluates to 1 on ``(e_I)`` (the
determinant convention, so ``(a^b)(X, Y) = a(X)b(Y) - a(Y)b(X)`` for 1-forms).
Vectors are sparse dicts ``{frame index: Expr}``.  An :class:`Endo` acts on
columns: ``phi(e_a) = sum_b phi[b, a] e_b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DegreeMismatch, DegreeOverflow
from .scalar import ONE, ZERO, Expr, as_expr

Vector = dict  # {int: Expr}


# permutations

def perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 if an entry repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


# vectors

def vec(*pairs) -> Vector:
    """Build a vector from ``(index, coefficient)`` pairs, dropping zeros."""
    out: dict[int, Expr] = {}
    for i, c in pairs:
        out[i] = out.get(i, ZERO) + as_expr(c)
    return {i: c for i, c in out.items() if not c.is_zero}


def basis_vector(i: int) -> Vector:
    return {i: ONE}


def vadd(u: Vector, v: Vector, scale=1) -> Vector:
    out = dict(u)
    for i, c in v.items():
        out[i] = out.get(i, ZERO) + c * scale
    return {i: c for i, c in out.items() if not c.is_zero}


def vscale(v: Vector, s) -> Vector:
    s = as_expr(s)
    if s.is_zero:
        return {}
    return {i: c * s for i, c in v.items()}


def vdot(u: Vector, v: Vector) -> Expr:
    if len(v) < len(u):
        u, v = v, u
    total = ZERO
    for i, c in u.items():
        d = v.get(i)
        if d is not None:
            total = total + c * d
    return total


def veq(u: Vector, v: Vector) -> bool:
    return not vadd(u, v, -1)


@dataclass(frozen=True)
class FrameSpace:
    """Ordered orthonormal frame with orientation ``e_1 ^ ... ^ e_dim``."""

    names: tuple[str, ...]
    orientation: int = 1

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("frame names must be unique")
        if self.orientation not in (1, -1):
            raise ValueError("orientation is +1 or -1")

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


class KForm:
    """Alternating k-form with coefficients on sorted index tuples."""

    __slots__ = ("dim", "degree", "_c")

    def __init__(self, dim: int, degree: int, coeffs: Mapping[tuple, object] | None = None):
        if degree < 0 or degree > dim:
            raise DegreeOverflow(f"degree {degree} on dimension {dim}")
        self.dim = dim
        self.degree = degree
        c: dict[tuple, Expr] = {}
        for key, val in (coeffs or {}).items():
            key = tuple(key)
            s = perm_sign(key)
            if len(key) != degree or any(not 0 <= i < dim for i in key):
                raise ValueError(f"index tuple {key} does not fit degree {degree}, dim {dim}")
            if s == 0:
                continue
            skey = tuple(sorted(key))
            c[skey] = c.get(skey, ZERO) + as_expr(val) * s
        self._c = {k: v for k, v in c.items() if not v.is_zero}

    @classmethod
    def _raw(cls, dim, degree, coeffs):
        f = object.__new__(cls)
        f.dim, f.degree, f._c = dim, degree, coeffs
        return f

    @classmethod
    def monomial(cls, dim: int, *indices: int, coeff=1) -> "KForm":
        return cls(dim, len(indices), {tuple(indices): coeff})

    @classmethod
    def scalar(cls, dim: int, value) -> "KForm":
        return cls(dim, 0, {(): value})

    # access
    def items(self):
        return self._c.items()

    def coeff(self, indices: Iterable[int]) -> Expr:
        key = tuple(indices)
        s = perm_sign(key)
        if s == 0:
            return ZERO
        v = self._c.get(tuple(sorted(key)), ZERO)
        return -v if s < 0 else v

    def __call__(self, *indices: int) -> Expr:
        return self.coeff(indices)

    @property
    def is_zero(self) -> bool:
        return not self._c

    def support(self) -> list[tuple]:
        return sorted(self._c)

    # linear structure
    def _check(self, other: "KForm"):
        if self.dim != other.dim or self.degree != other.degree:
            raise DegreeMismatch(f"({self.degree}, dim {self.dim}) vs ({other.degree}, dim {other.dim})")

    def __add__(self, other: "KForm") -> "KForm":
        self._check(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, ZERO) + v
        return KForm._raw(self.dim, self.degree, {k: v for k, v in out.items() if not v.is_zero})

    def __neg__(self) -> "KForm":
        return KForm._raw(self.dim, self.degree, {k: -v for k, v in self._c.items()})

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __mul__(self, s) -> "KForm":
        if isinstance(s, KForm):
            return NotImplemented
        s = as_expr(s)
        if s.is_zero:
            return KForm._raw(self.dim, self.degree, {})
        return KForm._raw(self.dim, self.degree, {k: v * s for k, v in self._c.items()})

    __rmul__ = __mul__

    def __xor__(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return self.dim == other.dim and self.degree == other.degree and (self - other).is_zero

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self._c.items())))

    # evaluation
    def evaluate(self, *vectors: Vector) -> Expr:
        """Multilinear evaluation on sparse vectors."""
        if len(vectors) != self.degree:
            raise DegreeMismatch(f"{self.degree}-form evaluated on {len(vectors)} vectors")
        total = ZERO

        def rec(pos, idx, coeff):
            nonlocal total
            if pos == len(vectors):
                v = self.coeff(idx)
                if not v.is_zero:
                    total = total + coeff * v
                return
            for i, c in vectors[pos].items():
                if i in idx:
                    continue
                rec(pos + 1, idx + (i,), coeff * c)

        rec(0, (), ONE)
        return total

    def restrict(self, allowed: Iterable[int]) -> "KForm":
        """Keep only monomials whose indices all lie in ``allowed``."""
        allowed = set(allowed)
        return KForm._raw(self.dim, self.degree, {k: v for k, v in self._c.items() if set(k) <= allowed})

    def __repr__(self):
        if not self._c:
            return f"KForm(deg={self.degree}, 0)"
        terms = " + ".join(f"({v})e{''.join(str(i + 1) for i in k)}" for k, v in sorted(self._c.items()))
        return f"KForm(deg={self.degree}, {terms})"


def one_form(dim: int, i: int) -> KForm:
    return KForm.monomial(dim, i)


def wedge(a: KForm, b: KForm) -> KForm:
    if a.dim != b.dim:
        raise DegreeMismatch("forms live on different dimensions")
    if a.degree + b.degree > a.dim:
        raise DegreeOverflow(f"{a.degree} + {b.degree} exceeds dimension {a.dim}")
    out: dict[tuple, Expr] = {}
    for I, x in a._c.items():
        for J, y in b._c.items():
            s = perm_sign(I + J)
            if s == 0:
                continue
            K = tuple(sorted(I + J))
            term = x * y
            out[K] = out.get(K, ZERO) + (term if s > 0 else -term)
    return KForm._raw(a.dim, a.degree + b.degree, {k: v for k, v in out.items() if not v.is_zero})


def wedge_all(*forms: KForm) -> KForm:
    out = forms[0]
    for f in forms[1:]:
        out = wedge(out, f)
    return out


def contract(v, a: KForm) -> KForm:
    """Interior product ``v _| a``; ``v`` is a frame index or a sparse vector."""
    if a.degree < 1:
        raise DegreeMismatch("cannot contract a 0-form")
    vector = basis_vector(v) if isinstance(v, int) else v
    out: dict[tuple, Expr] = {}
    for I, x in a._c.items():
        for m, i in enumerate(I):
            c = vector.get(i)
            if c is None:
                continue
            K = I[:m] + I[m + 1:]
            term = x * c
            out[K] = out.get(K, ZERO) + (term if m % 2 == 0 else -term)
    return KForm._raw(a.dim, a.degree - 1, {k: v for k, v in out.items() if not v.is_zero})


def hodge_star(a: KForm, orientation: int = 1) -> KForm:
    """``e_I ^ *e_I = vol`` for the orthonormal frame and the given orientation."""
    full = tuple(range(a.dim))
    out = {}
    for I, x in a._c.items():
        comp = tuple(i for i in full if i not in I)
        s = perm_sign(I + comp) * orientation
        out[comp] = x if s > 0 else -x
    return KForm._raw(a.dim, a.dim - a.degree, out)


def volume(dim: int, orientation: int = 1) -> KForm:
    return KForm.monomial(dim, *range(dim), coeff=orientation)


def form_inner(a: KForm, b: KForm) -> Expr:
    """Inner product in which distinct sorted monomials are orthonormal."""
    if a.degree != b.degree or a.dim != b.dim:
        raise DegreeMismatch(f"degrees {a.degree} and {b.degree}")
    total = ZERO
    for I, x in a._c.items():
        y = b._c.get(I)
        if y is not None:
            total = total + x * y
    return total


class Endo:
    """Linear endomorphism of the frame space acting on columns."""

    __slots__ = ("dim", "_cols")

    def __init__(self, dim: int, cols: Mapping[int, Vector] | None = None):
        self.dim = dim
        self._cols = {a: {b: as_expr(c) for b, c in v.items() if not as_expr(c).is_zero}
                      for a, v in (cols or {}).items()}
        self._cols = {a: v for a, v in self._cols.items() if v}

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "Endo":
        """Matrix whose column ``a`` holds the components of ``phi(e_a)``."""
        dim = len(rows)
        cols: dict[int, dict] = {}
        for b, row in enumerate(rows):
            if len(row) != dim:
                raise ValueError("matrix must be square")
            for a, entry in enumerate(row):
                e = as_expr(entry)
                if not e.is_zero:
                    cols.setdefault(a, {})[b] = e
        return cls(dim, cols)

    @classmethod
    def identity(cls, dim: int) -> "Endo":
        return cls(dim, {a: {a: ONE} for a in range(dim)})

    @classmethod
    def zero(cls, dim: int) -> "Endo":
        return cls(dim, {})

    @classmethod
    def outer(cls, form: KForm, v: Vector) -> "Endo":
        """The endomorphism ``X -> form(X) v`` for a 1-form."""
        cols = {}
        for (a,), c in form.items():
            cols[a] = vscale(v, c)
        return cls(form.dim, cols)

    def column(self, a: int) -> Vector:
        return self._cols.get(a, {})

    def entry(self, row: int, col: int) -> Expr:
        return self._cols.get(col, {}).get(row, ZERO)

    def matrix(self) -> list[list[Expr]]:
        return [[self.entry(b, a) for a in range(self.dim)] for b in range(self.dim)]

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        for a, c in v.items():
            col = self._cols.get(a)
            if col:
                out = vadd(out, col, c)
        return out

    def __call__(self, v):
        return self.apply(basis_vector(v) if isinstance(v, int) else v)

    def __matmul__(self, other: "Endo") -> "Endo":
        return Endo(self.dim, {a: self.apply(v) for a, v in other._cols.items()})

    def __add__(self, other: "Endo") -> "Endo":
        keys = set(self._cols) | set(other._cols)
        return Endo(self.dim, {a: vadd(self.column(a), other.column(a)) for a in keys})

    def __neg__(self) -> "Endo":
        return Endo(self.dim, {a: vscale(v, -1) for a, v in self._cols.items()})

    def __sub__(self, other: "Endo") -> "Endo":
        return self + (-other)

    def __mul__(self, s) -> "Endo":
        if isinstance(s, Endo):
            return NotImplemented
        return Endo(self.dim, {a: vscale(v, s) for a, v in self._cols.items()})

    __rmul__ = __mul__

    def transpose(self) -> "Endo":
        cols: dict[int, dict] = {}
        for a, v in self._cols.items():
            for b, c in v.items():
                cols.setdefault(b, {})[a] = c
        return Endo(self.dim, cols)

    @property
    def is_zero(self) -> bool:
        return not self._cols

    def __eq__(self, other):
        if not isinstance(other, Endo):
            return NotImplemented
        return self.dim == other.dim and (self - other).is_zero

    __hash__ = None

    def first_difference(self, other: "Endo"):
        """``(row, col)`` of the first differing entry, or None."""
        diff = self - other
        for a in sorted(diff._cols):
            b = min(diff._cols[a])
            return (b, a)
        return None

    def __repr__(self):
        return f"Endo(dim={self.dim}, {self.matrix()})"


def pullback(a: KForm, phi: Endo) -> KForm:
    """``(phi^* a)(X_1, ..., X_k) = a(phi X_1, ..., phi X_k)``."""
    k = a.degree
    images = [phi.column(i) for i in range(a.dim)]
    out = {}
    for I in combinations(range(a.dim), k):
        if any(not images[i] for i in I):
            continue
        v = a.evaluate(*(images[i] for i in I))
        if not v.is_zero:
            out[I] = v
    return KForm._raw(a.dim, k, out)


def phi_twist(dPhi: KForm, phi: Endo) -> KForm:
    """``X, Y, Z -> -dPhi(phi X, phi Y, phi Z)``."""
    if dPhi.degree != 3:
        raise DegreeMismatch("the twisted differential is defined on 3-forms")
    return -pullback(dPhi, phi)


class Trilinear:
    """Covariant 3-tensor antisymmetric in its first two slots."""

    __slots__ = ("dim", "_c")

    def __init__(self, dim: int, coeffs: Mapping[tuple, object] | None = None):
        self.dim = dim
        c: dict[tuple, Expr] = {}
        for (a, b, x), val in (coeffs or {}).items():
            if a == b:
                continue
            key, s = ((a, b, x), 1) if a < b else ((b, a, x), -1)
            c[key] = c.get(key, ZERO) + as_expr(val) * s
        self._c = {k: v for k, v in c.items() if not v.is_zero}

    @classmethod
    def from_function(cls, dim: int, fn: Callable[[int, int, int], Expr],
                      first: Iterable[int] | None = None, last: Iterable[int] | None = None) -> "Trilinear":
        """Tabulate ``fn(a, b, c)`` for ``a < b`` (in ``first``) and ``c`` in ``last``."""
        first = sorted(first) if first is not None else list(range(dim))
        last = list(last) if last is not None else list(range(dim))
        out = {}
        for a, b in combinations(first, 2):
            for c in last:
                v = fn(a, b, c)
                if not v.is_zero:
                    out[(a, b, c)] = v
        t = object.__new__(cls)
        t.dim, t._c = dim, out
        return t

    @classmethod
    def from_form(cls, a: KForm) -> "Trilinear":
        if a.degree != 3:
            raise DegreeMismatch("expected a 3-form")
        out = {}
        for (i, j, k), v in a.items():
            for (p, q, r), s in (((i, j, k), 1), ((j, k, i), 1), ((i, k, j), -1)):
                out[(p, q, r)] = v if s > 0 else -v
        t = object.__new__(cls)
        t.dim, t._c = a.dim, out
        return t

    def __call__(self, a: int, b: int, c: int) -> Expr:
        if a == b:
            return ZERO
        if a < b:
            return self._c.get((a, b, c), ZERO)
        return -self._c.get((b, a, c), ZERO)

    def items(self):
        return self._c.items()

    def evaluate(self, x: Vector, y: Vector, z: Vector) -> Expr:
        total = ZERO
        for a, ca in x.items():
            for b, cb in y.items():
                if a == b:
                    continue
                for c, cc in z.items():
                    v = self(a, b, c)
                    if not v.is_zero:
                        total = total + ca * cb * cc * v
        return total

    def restrict(self, allowed: Iterable[int]) -> "Trilinear":
        allowed = set(allowed)
        t = object.__new__(Trilinear)
        t.dim, t._c = self.dim, {k: v for k, v in self._c.items() if set(k) <= allowed}
        return t

    def __add__(self, other: "Trilinear") -> "Trilinear":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, ZERO) + v
        t = object.__new__(Trilinear)
        t.dim, t._c = self.dim, {k: v for k, v in out.items() if not v.is_zero}
        return t

    def __neg__(self):
        t = object.__new__(Trilinear)
        t.dim, t._c = self.dim, {k: -v for k, v in self._c.items()}
        return t

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        s = as_expr(s)
        t = object.__new__(Trilinear)
        t.dim, t._c = self.dim, ({} if s.is_zero else {k: v * s for k, v in self._c.items()})
        return t

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not self._c

    def first_nonzero(self):
        """``((a, b, c), value)`` for the smallest nonzero entry, or None."""
        if not self._c:
            return None
        k = min(self._c)
        return k, self._c[k]

    def __eq__(self, other):
        if not isinstance(other, Trilinear):
            return NotImplemented
        return (self - other).is_zero

    __hash__ = None

    def skew_violation(self, indices: Iterable[int] | None = None):
        """First ``(a, b, c)`` with ``t(a,b,c) != -t(a,c,b)`` inside ``indices``, or None."""
        idx = sorted(indices) if indices is not None else list(range(self.dim))
        for a in idx:
            for b in idx:
                for c in idx:
                    if b < c and self(a, b, c) != -self(a, c, b):
                        return (a, b, c)
        return None

    def is_skew(self, indices: Iterable[int] | None = None) -> bool:
        return self.skew_violation(indices) is None

    def to_form(self, indices: Iterable[int] | None = None) -> KForm:
        """The 3-form with the same sorted-triple values (meaningful when skew)."""
        idx = sorted(indices) if indices is not None else list(range(self.dim))
        out = {}
        for I in combinations(idx, 3):
            v = self(*I)
            if not v.is_zero:
                out[I] = v
        return KForm._raw(self.dim, 3, out)

    def __repr__(self):
        return f"Trilinear(dim={self.dim}, {dict(sorted(self._c.items()))})"


class Bilinear:
    """Covariant 2-tensor stored as a sparse matrix."""

    __slots__ = ("dim", "_c")

    def __init__(self, dim: int, coeffs: Mapping[tuple, object] | None = None):
        self.dim = dim
        self._c = {k: as_expr(v) for k, v in (coeffs or {}).items() if not as_expr(v).is_zero}

    def __call__(self, a: int, b: int) -> Expr:
        return self._c.get((a, b), ZERO)

    def items(self):
        return self._c.items()

    def evaluate(self, x: Vector, y: Vector) -> Expr:
        total = ZERO
        for a, ca in x.items():
            for b, cb in y.items():
                v = self._c.get((a, b))
                if v is not None:
                    total = total + ca * cb * v
        return total

    def __add__(self, other):
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, ZERO) + v
        return type(self)(self.dim, out)

    def __neg__(self):
        return type(self)(self.dim, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        return type(self)(self.dim, {k: v * s for k, v in self._c.items()})

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not self._c

    def is_symmetric(self) -> bool:
        return all(self(b, a) == v for (a, b), v in self._c.items())

    def __eq__(self, other):
        if not isinstance(other, Bilinear):
            return NotImplemented
        return (self - other).is_zero

    __hash__ = None

    def restrict(self, allowed: Iterable[int]) -> "Bilinear":
        allowed = set(allowed)
        return type(self)(self.dim, {k: v for k, v in self._c.items() if set(k) <= allowed})

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, {dict(sorted(self._c.items()))})"


class SymBilinear(Bilinear):
    """Symmetric covariant 2-tensor; symmetry is checked on construction."""

    __slots__ = ()

    def __init__(self, dim: int, coeffs: Mapping[tuple, object] | None = None):
        super().__init__(dim, coeffs)
        if not self.is_symmetric():
            raise ValueError("coefficients are not symmetric")

    @classmethod
    def from_upper(cls, dim: int, upper: Mapping[tuple, object]) -> "SymBilinear":
        full = {}
        for (a, b), v in upper.items():
            full[(a, b)] = v
            full[(b, a)] = v
        return cls(dim, full)


def metric(dim: int) -> SymBilinear:
    return SymBilinear(dim, {(a, a): ONE for a in range(dim)})


def sym_product(a: KForm, b: KForm) -> Bilinear:
    """Symmetric product ``a (x) b`` of two 1-forms as a bilinear form."""
    out = {}
    for (i,), x in a.items():
        for (j,), y in b.items():
            out[(i, j)] = out.get((i, j), ZERO) + x * y
    return Bilinear(a.dim, out)
