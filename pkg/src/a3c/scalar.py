"""Exact rational functions in named parameters.

Every coefficient in the engine is an :class:`Expr`: a quotient of two
polynomials with rational coefficients, kept in lowest terms.  Internally a
value is one of three normalized forms: a bare ``gmpy2.mpq`` constant, a sympy
sparse polynomial over a process-wide parameter ring (lex order, grows as new
names are declared), or a reduced quotient whose denominator is non-constant.
Cancellation only runs when a genuine denominator is involved.

Example:
    >>> lam = param("lambda", positive=True)
    >>> (lam + lam) / 2 == lam
    True
    >>> evaluate(lam / 2, {"lambda": 3})
    Fraction(3, 2)
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from gmpy2 import mpq
from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing
from sympy.polys.orderings import lex

from .errors import (
    DenominatorVanishes,
    DivisionByZeroExpr,
    InvalidAssignment,
    UnboundParam,
)
from .syntax import TokenStream, parse_expression, tokenize

RESERVED = ("alpha", "delta", "beta", "gamma", "lambda", "s", "c", "rho", "n")

_MPQ = type(mpq(0))


@dataclass(frozen=True)
class Param:
    name: str
    positive: bool = False


class _Registry:
    """Ordered parameter names and the polynomial ring they generate."""

    def __init__(self):
        self._lock = threading.Lock()
        self.params: dict[str, Param] = {}
        self.names: tuple[str, ...] = ()
        self.ring = PolyRing((Symbol("_unused"),), QQ, lex)
        for name in RESERVED:
            self.declare(name)

    def declare(self, name: str, positive: bool = False) -> Param:
        with self._lock:
            old = self.params.get(name)
            if old is not None:
                if positive and not old.positive:
                    old = Param(name, True)
                    self.params[name] = old
                return old
            p = Param(name, positive)
            self.params[name] = p
            self.names = self.names + (name,)
            self.ring = PolyRing(tuple(Symbol(x) for x in self.names), QQ, lex)
            return p


_REG = _Registry()


class _Frac(tuple):
    """Reduced quotient (numerator, denominator) with a non-constant denominator."""

    __slots__ = ()


def _cur(p: PolyElement) -> PolyElement:
    ring = _REG.ring
    return p if p.ring is ring else p.set_ring(ring)


def _pair(v):
    """Numerator and denominator of a raw value in the current ring."""
    ring = _REG.ring
    if type(v) is _MPQ:
        return ring.ground_new(v), ring.one
    if type(v) is _Frac:
        return _cur(v[0]), _cur(v[1])
    return _cur(v), ring.one


def _poly(p: PolyElement):
    if p.is_ground:
        return mpq(p.LC) if p else mpq(0)
    return p


def _make(num: PolyElement, den: PolyElement):
    if den.is_ground:
        return _poly(num.quo_ground(den.LC))
    p, q = num.cancel(den)
    if q.is_ground:
        return _poly(p.quo_ground(q.LC))
    return _Frac((p, q))


def _add(a, b):
    ta, tb = type(a), type(b)
    if ta is not _Frac and tb is not _Frac:
        if ta is _MPQ:
            return _poly(_cur(b) + a)
        if tb is _MPQ:
            return _poly(_cur(a) + b)
        return _poly(_cur(a) + _cur(b))
    (n1, d1), (n2, d2) = _pair(a), _pair(b)
    if d1 == d2:
        return _make(n1 + n2, d1)
    return _make(n1 * d2 + n2 * d1, d1 * d2)


def _mul(a, b):
    ta, tb = type(a), type(b)
    if ta is _MPQ or tb is _MPQ:
        q, v = (a, b) if ta is _MPQ else (b, a)
        if not q:
            return mpq(0)
        if type(v) is _Frac:
            return _Frac((_cur(v[0]).mul_ground(q), _cur(v[1])))
        return _cur(v).mul_ground(q)
    if ta is not _Frac and tb is not _Frac:
        return _poly(_cur(a) * _cur(b))
    (n1, d1), (n2, d2) = _pair(a), _pair(b)
    return _make(n1 * n2, d1 * d2)


def _div(a, b):
    if type(b) is _MPQ:
        return _mul(a, 1 / b)
    (n1, d1), (n2, d2) = _pair(a), _pair(b)
    return _make(n1 * d2, d1 * n2)


def _neg(v):
    if type(v) is _Frac:
        return _Frac((-v[0], v[1]))
    return -v


def _raw(x):
    if isinstance(x, Expr):
        return x._v
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if type(x) is _MPQ:
        return x
    if isinstance(x, str):
        return parse_expr(x)._v
    return NotImplemented


class Expr:
    """Immutable exact rational function; supports + - * / ** and equality."""

    __slots__ = ("_v",)

    def __init__(self, value: Union["Expr", int, Fraction, str] = 0):
        v = _raw(value)
        if v is NotImplemented:
            raise TypeError(f"cannot make a scalar from {type(value).__name__}")
        self._v = v

    @classmethod
    def _wrap(cls, v):
        e = object.__new__(cls)
        e._v = v
        return e

    # arithmetic
    def _binary(self, other, op, reflected=False):
        o = _raw(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = (o, self._v) if reflected else (self._v, o)
        if type(a) is _MPQ and type(b) is _MPQ:
            return Expr._wrap(_FAST[op](a, b))
        return Expr._wrap(op(a, b))

    def __add__(self, other):
        return self._binary(other, _add)

    def __radd__(self, other):
        return self._binary(other, _add, True)

    def __sub__(self, other):
        o = _raw(other)
        if o is NotImplemented:
            return NotImplemented
        return self._binary(Expr._wrap(_neg(o)), _add)

    def __rsub__(self, other):
        return (-self)._binary(other, _add)

    def __mul__(self, other):
        return self._binary(other, _mul)

    def __rmul__(self, other):
        return self._binary(other, _mul, True)

    def __truediv__(self, other):
        o = _raw(other)
        if o is NotImplemented:
            return NotImplemented
        if _is_zero_raw(o):
            raise DivisionByZeroExpr("division by an identically zero expression")
        return self._binary(Expr._wrap(o), _div)

    def __rtruediv__(self, other):
        if self.is_zero:
            raise DivisionByZeroExpr("division by an identically zero expression")
        return self._binary(other, _div, True)

    def __neg__(self):
        return Expr._wrap(_neg(self._v))

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return Expr(1) / self ** (-k)
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    # comparison
    def __eq__(self, other):
        o = _raw(other)
        if o is NotImplemented:
            return NotImplemented
        a = self._v
        if type(a) is _MPQ and type(o) is _MPQ:
            return a == o
        if type(a) is not type(o):
            return False  # normalized forms: constant, polynomial and fraction never coincide
        return _is_zero_raw(_add(a, _neg(o)))

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        v = self._v
        if type(v) is _MPQ:
            return hash(Fraction(int(v.numerator), int(v.denominator)))
        return hash(self._key())

    def _key(self):
        num, den = _pair(self._v)
        names = num.ring.symbols

        def poly_key(p):
            out = []
            for exps, coeff in p.terms():
                mono = tuple((str(names[i]), e) for i, e in enumerate(exps) if e)
                out.append((mono, (int(coeff.numerator), int(coeff.denominator))))
            return tuple(sorted(out))

        return (poly_key(num), poly_key(den))

    def __bool__(self):
        return not self.is_zero

    # inspection
    @property
    def is_zero(self) -> bool:
        return _is_zero_raw(self._v)

    @property
    def is_constant(self) -> bool:
        return type(self._v) is _MPQ

    def as_fraction(self) -> Fraction:
        """The rational value of a constant expression."""
        v = self._v
        if type(v) is not _MPQ:
            raise ValueError(f"{self} is not a constant")
        return Fraction(int(v.numerator), int(v.denominator))

    def free_params(self) -> frozenset[str]:
        v = self._v
        if type(v) is _MPQ:
            return frozenset()
        num, den = _pair(v)
        names = num.ring.symbols
        used = set()
        for p in (num, den):
            for exps in p.monoms():
                used.update(str(names[i]) for i, e in enumerate(exps) if e)
        return frozenset(used)

    def parts(self):
        """(numerator terms, denominator terms), each a list of ({name: exp}, Fraction)."""
        v = self._v
        if type(v) is _MPQ:
            return [({}, self.as_fraction())], [({}, Fraction(1))]
        num, den = _pair(v)
        names = num.ring.symbols

        def terms(p):
            return [({str(names[i]): e for i, e in enumerate(exps) if e},
                     Fraction(int(c.numerator), int(c.denominator))) for exps, c in p.terms()]

        return terms(num), terms(den)

    def __str__(self):
        num, den = self.parts()
        num_s = _poly_str(num)
        if den == [({}, Fraction(1))]:
            return num_s
        if len(num) > 1:
            num_s = f"({num_s})"
        den_s = _poly_str(den)
        if not (len(den) == 1 and not den[0][0] and den[0][1].denominator == 1):
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    def __repr__(self):
        return f"Expr({str(self)!r})"


def _is_zero_raw(v) -> bool:
    return type(v) is _MPQ and v == 0


def _poly_str(terms) -> str:
    pieces = []
    for mono, coeff in terms:
        factors = [name for name, e in sorted(mono.items(), key=lambda t: _REG.names.index(t[0])) for _ in range(e)]
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        pieces.append(("-" if coeff < 0 else "+", body))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_FAST = {_add: lambda a, b: a + b, _mul: lambda a, b: a * b, _div: lambda a, b: a / b}

# construction helpers
ZERO = Expr(0)
ONE = Expr(1)

Scalar = Union[Expr, int, Fraction]


def declare(name: str, positive: bool = False) -> Param:
    """Register a parameter name (idempotent; a later positive flag sticks)."""
    return _REG.declare(name, positive)


def param(name: str, positive: bool = False) -> Expr:
    """The rational function consisting of the single parameter ``name``."""
    _REG.declare(name, positive)
    return Expr._wrap(_REG.ring.gens[_REG.names.index(name)])


def lookup(name: str) -> Param | None:
    return _REG.params.get(name)


def as_expr(x: Scalar) -> Expr:
    return x if isinstance(x, Expr) else Expr(x)


def parse_expr(text: str) -> Expr:
    """Parse ``text`` with the shared grammar; every identifier is a parameter."""
    stream = TokenStream(tokenize(text))
    value = parse_expression(stream, lambda tok: param(tok.text), lambda q: Expr(q))
    stream.expect_kind("eof", "end of expression")
    return as_expr(value)


# assignments and evaluation
class Assignment(Mapping[str, Fraction]):
    """Exact rational values for parameters, checked against positivity flags."""

    def __init__(self, values: Mapping[Union[str, Param], Scalar] | None = None):
        data = {}
        for key, val in (values or {}).items():
            name = key.name if isinstance(key, Param) else str(key)
            q = _to_fraction(val)
            p = _REG.params.get(name)
            if p is not None and p.positive and q <= 0:
                raise InvalidAssignment(f"{name} is declared positive but assigned {q}")
            data[name] = q
        self._data = data

    def __getitem__(self, key):
        return self._data[key.name if isinstance(key, Param) else key]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __repr__(self):
        return f"Assignment({self._data!r})"


def _to_fraction(val) -> Fraction:
    if isinstance(val, Fraction):
        return val
    if isinstance(val, int):
        return Fraction(val)
    if isinstance(val, str):
        return Fraction(val)
    if isinstance(val, Expr):
        return val.as_fraction()
    if type(val) is _MPQ:
        return Fraction(int(val.numerator), int(val.denominator))
    raise TypeError(f"not an exact rational: {val!r}")


def evaluate(e: Scalar, sigma: Mapping) -> Fraction:
    """Substitute rationals for parameters and compute exactly.

    Works term by term on the stored numerator and denominator with
    ``fractions.Fraction``, independently of the field arithmetic.
    """
    sigma = sigma if isinstance(sigma, Assignment) else Assignment(sigma)
    num, den = as_expr(e).parts()

    def value(terms):
        total = Fraction(0)
        for mono, coeff in terms:
            t = coeff
            for name, k in mono.items():
                if name not in sigma:
                    raise UnboundParam(name)
                t *= sigma[name] ** k
            total += t
        return total

    d = value(den)
    if d == 0:
        raise DenominatorVanishes(f"denominator of {e} vanishes at {dict(sigma)}")
    return value(num) / d


def substitute(e: Scalar, mapping: Mapping[str, Scalar]) -> Expr:
    """Replace parameters by scalars (rationals or other expressions)."""
    num, den = as_expr(e).parts()
    repl = {k: as_expr(v) for k, v in mapping.items()}

    def value(terms):
        total = ZERO
        for mono, coeff in terms:
            t = Expr(coeff)
            for name, k in mono.items():
                t = t * (repl[name] ** k if name in repl else param(name) ** k)
            total = total + t
        return total

    return value(num) / value(den)


def rational_sqrt(q: Scalar) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    q = _to_fraction(q)
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def params_in(exprs: Iterable[Scalar]) -> frozenset[str]:
    out: set[str] = set()
    for e in exprs:
        out |= as_expr(e).free_params()
    return frozenset(out)


def definite_sign(e: Scalar, positive: Iterable[str] | None = None) -> int | None:
    """Sign of ``e`` when every parameter in it is positive and each of numerator and
    denominator has terms of one sign; None when that test is inconclusive.

    ``positive`` overrides the registry's positivity flags.
    """
    e = as_expr(e)
    if e.is_zero:
        return 0
    allowed = set(positive) if positive is not None else {n for n, p in _REG.params.items() if p.positive}
    if not e.free_params() <= allowed:
        return None
    num, den = e.parts()
    signs = []
    for terms in (num, den):
        s = {1 if c > 0 else -1 for _, c in terms}
        if len(s) != 1:
            return None
        signs.append(s.pop())
    return signs[0] * signs[1]
