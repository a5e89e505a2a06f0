"""Text format for Lie algebras with an almost 3-contact metric structure.

::

    algebra heisenberg7 {
      params: lambda > 0;
      dim: 7;
      frame: xi1 xi2 xi3 tau1 tau2 tau3 tau4;
      brackets:
        [tau1, tau2] = lambda*xi1;
        [tau3, tau4] = lambda*xi1 + 0*xi2;
      ;
      structure: standard;
    }

Bracket right-hand sides are sums of ``scalar*frame_name`` terms.  A
parameter may carry ``> 0`` to declare it positive.  The structure is either
``standard`` or ``explicit { phi1: [[..],..]; phi2: ...; phi3: ...; }`` with
matrices given row by row.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .acms import A3CStructure, standard_phi, validate_structure
from .errors import (
    DslSyntaxError,
    DuplicateFrameName,
    IndexOutOfRange,
    InvalidStructure,
    JacobiFailure,
)
from .frame_alg import Endo, FrameSpace
from .liegeom import ConstantBrackets, LieFrameGeometry, jacobi_check
from .scalar import Expr, as_expr, declare, param
from .syntax import Token, TokenStream, parse_expression, tokenize


@dataclass(frozen=True)
class AlgebraDoc:
    name: str
    params: tuple  # ((name, positive), ...)
    dim: int
    frame: tuple
    brackets: tuple  # (((left, right), ((target, coeff), ...)), ...)
    structure: object  # "standard" or a triple of row tuples

    @property
    def n(self) -> int:
        return (self.dim - 3) // 4


class _Lin(dict):
    """A linear combination of frame names produced while parsing a bracket value."""

    def _merge(self, other, sign):
        out = _Lin(self)
        for k, v in other.items():
            out[k] = out.get(k, Expr(0)) + v * sign
        return out

    def __add__(self, other):
        if not isinstance(other, _Lin):
            raise TypeError("cannot add a scalar to a frame vector")
        return self._merge(other, 1)

    def __radd__(self, other):
        raise TypeError("cannot add a scalar to a frame vector")

    def __sub__(self, other):
        if not isinstance(other, _Lin):
            raise TypeError("cannot subtract a scalar from a frame vector")
        return self._merge(other, -1)

    def __rsub__(self, other):
        raise TypeError("cannot subtract a frame vector from a scalar")

    def __mul__(self, s):
        if isinstance(s, _Lin):
            raise TypeError("frame vectors cannot be multiplied")
        return _Lin({k: v * s for k, v in self.items()})

    __rmul__ = __mul__

    def __truediv__(self, s):
        if isinstance(s, _Lin):
            raise TypeError("cannot divide by a frame vector")
        return _Lin({k: v / s for k, v in self.items()})

    def __rtruediv__(self, other):
        raise TypeError("cannot divide by a frame vector")

    def __neg__(self):
        return _Lin({k: -v for k, v in self.items()})


# parsing

def _ident(stream: TokenStream, what: str) -> Token:
    return stream.expect_kind("id", what)


def _section(stream: TokenStream, key: str):
    stream.expect(key)
    stream.expect(":")


def _parse_params(stream: TokenStream) -> tuple:
    out = []
    seen = set()
    while not stream.at(";"):
        tok = _ident(stream, "parameter name")
        if tok.text in seen:
            raise DslSyntaxError(f"parameter {tok.text!r} declared twice", tok.line, tok.col)
        seen.add(tok.text)
        positive = False
        if stream.accept(">"):
            zero = stream.expect_kind("num", "0")
            if Fraction(zero.text) != 0:
                raise DslSyntaxError("only '> 0' is allowed", zero.line, zero.col)
            positive = True
        out.append((tok.text, positive))
        if not stream.accept(","):
            break
    stream.expect(";")
    return tuple(out)


def _parse_scalar(stream: TokenStream, params: dict) -> Expr:
    def resolve(tok):
        if tok.text not in params:
            raise DslSyntaxError(f"unknown parameter {tok.text!r}", tok.line, tok.col)
        return params[tok.text]

    return as_expr(parse_expression(stream, resolve, Expr))


def _parse_matrix(stream: TokenStream, params: dict, dim: int, label: str) -> tuple:
    start = stream.expect("[")
    rows = []
    while True:
        row_tok = stream.expect("[")
        row = []
        while True:
            row.append(_parse_scalar(stream, params))
            if not stream.accept(","):
                break
        stream.expect("]")
        if len(row) != dim:
            raise IndexOutOfRange(f"{label} row has {len(row)} entries, expected {dim}", row_tok.line, row_tok.col)
        rows.append(tuple(row))
        if not stream.accept(","):
            break
    stream.expect("]")
    if len(rows) != dim:
        raise IndexOutOfRange(f"{label} has {len(rows)} rows, expected {dim}", start.line, start.col)
    return tuple(rows)


def parse(text: str) -> AlgebraDoc:
    """Parse and validate a document; every rejection carries a line and column."""
    try:
        return _parse(text)
    except DslSyntaxError:
        raise
    except RecursionError:
        raise DslSyntaxError("expression nested too deeply", 1, 1) from None


def _parse(text: str) -> AlgebraDoc:
    stream = TokenStream(tokenize(text))
    stream.expect("algebra")
    name = _ident(stream, "algebra name").text
    stream.expect("{")

    _section(stream, "params")
    params = _parse_params(stream)
    scope = {p: param(p, positive=pos) for p, pos in params}

    _section(stream, "dim")
    dim_tok = stream.expect_kind("num", "dimension")
    try:
        dim = int(dim_tok.text)
    except ValueError:
        raise DslSyntaxError("dimension must be an integer", dim_tok.line, dim_tok.col) from None
    stream.expect(";")

    frame_tok = stream.peek()
    _section(stream, "frame")
    frame = []
    while stream.peek().kind == "id":
        tok = stream.next()
        if tok.text in frame:
            raise DuplicateFrameName(f"frame name {tok.text!r} repeated", tok.line, tok.col)
        if tok.text in scope:
            raise DslSyntaxError(f"{tok.text!r} is already a parameter", tok.line, tok.col)
        frame.append(tok.text)
    stream.expect(";")
    if len(frame) != dim:
        raise IndexOutOfRange(f"dim is {dim} but {len(frame)} frame names are given", frame_tok.line, frame_tok.col)
    index = {f: i for i, f in enumerate(frame)}

    _section(stream, "brackets")
    brackets = []
    seen_pairs = {}
    while stream.at("["):
        open_tok = stream.next()
        left = _ident(stream, "frame name")
        stream.expect(",")
        right = _ident(stream, "frame name")
        stream.expect("]")
        for tok in (left, right):
            if tok.text not in index:
                raise DslSyntaxError(f"unknown frame name {tok.text!r}", tok.line, tok.col)
        if left.text == right.text:
            raise DslSyntaxError("a bracket needs two different frame vectors", left.line, left.col)
        pair = frozenset((left.text, right.text))
        if pair in seen_pairs:
            raise DslSyntaxError(f"bracket [{left.text}, {right.text}] given twice", open_tok.line, open_tok.col)
        seen_pairs[pair] = True
        eq = stream.expect("=")

        def resolve(tok):
            if tok.text in index:
                return _Lin({tok.text: Expr(1)})
            if tok.text in scope:
                return scope[tok.text]
            raise DslSyntaxError(f"unknown name {tok.text!r}", tok.line, tok.col)

        value = parse_expression(stream, resolve, Expr)
        if not isinstance(value, _Lin):
            raise DslSyntaxError("a bracket value must be a combination of frame vectors", eq.line, eq.col)
        stream.expect(";")
        terms = tuple((k, as_expr(v)) for k, v in value.items())
        brackets.append(((left.text, right.text), terms))
    stream.expect(";")

    _section(stream, "structure")
    struct_tok = stream.peek()
    if stream.accept("standard"):
        structure = "standard"
    elif stream.accept("explicit"):
        stream.expect("{")
        mats = []
        for i in (1, 2, 3):
            _section(stream, f"phi{i}")
            mats.append(_parse_matrix(stream, scope, dim, f"phi{i}"))
            stream.expect(";")
        stream.expect("}")
        structure = tuple(mats)
    else:
        raise DslSyntaxError("expected 'standard' or 'explicit'", struct_tok.line, struct_tok.col)
    stream.expect(";")
    stream.expect("}")
    stream.expect_kind("eof", "end of input")
    if (dim - 3) % 4 or dim < 3:
        raise IndexOutOfRange(f"a structure needs dimension 4n+3, got {dim}", struct_tok.line, struct_tok.col)

    doc = AlgebraDoc(name, params, dim, tuple(frame), tuple(brackets), structure)
    jac = jacobi_check(_brackets(doc))
    if not jac.ok:
        a, b, c = (frame[i] for i in jac.triple)
        raise JacobiFailure(f"Jacobi identity fails on ({a}, {b}, {c})")
    return doc


# conversion

def _brackets(doc: AlgebraDoc) -> ConstantBrackets:
    index = {f: i for i, f in enumerate(doc.frame)}
    table = {}
    for (left, right), terms in doc.brackets:
        a, b = index[left], index[right]
        v = {index[t]: c for t, c in terms}
        key, sign = ((a, b), 1) if a < b else ((b, a), -1)
        table[key] = {k: x * sign for k, x in v.items()}
    return ConstantBrackets(doc.dim, table)


def to_structure(doc: AlgebraDoc) -> A3CStructure:
    for p, pos in doc.params:
        declare(p, positive=pos)
    G = LieFrameGeometry(FrameSpace(doc.frame), _brackets(doc))
    if doc.structure == "standard":
        phi = standard_phi(doc.n)
    else:
        phi = tuple(Endo.from_matrix(m) for m in doc.structure)
    S = A3CStructure(G, phi, doc.name)
    res = validate_structure(S)
    if not res.ok:
        raise InvalidStructure(f"{res.axiom} fails at {res.witness}")
    return S


def from_structure(S: A3CStructure, name: str | None = None, params=None, standard: bool = True) -> AlgebraDoc:
    """Canonical document of a constant-bracket structure: brackets sorted by frame index."""
    frame = S.geometry.frame.names
    if params is None:
        from .scalar import lookup, params_in

        found = set()
        for _, v in S.geometry.brackets.items():
            found |= params_in(v.values())
        params = tuple((p, lookup(p).positive) for p in sorted(found))
    brackets = []
    for (a, b), v in S.geometry.brackets.items():
        terms = tuple((frame[c], x) for c, x in sorted(v.items()))
        brackets.append(((frame[a], frame[b]), terms))
    if standard:
        structure = "standard"
    else:
        structure = tuple(tuple(tuple(row) for row in p.matrix()) for p in S.phi)
    name = re.sub(r"\W", "_", name or S.name or "algebra")
    if not (name[0].isalpha() or name[0] == "_"):
        name = "_" + name
    return AlgebraDoc(name, tuple(params), S.dim, tuple(frame), tuple(brackets), structure)


def canonical(doc: AlgebraDoc) -> AlgebraDoc:
    """Sort brackets by frame position and orient them with the smaller index first."""
    return from_structure(to_structure(doc), doc.name, doc.params, doc.structure == "standard")


# printing

def _scalar_text(x: Expr) -> str:
    s = str(x)
    simple = all(ch.isalnum() or ch in "_*/." for ch in s) or (
        s.startswith("-") and all(ch.isalnum() or ch in "_*/." for ch in s[1:]))
    return s if simple else f"({s})"


def _term_text(target: str, coeff: Expr) -> str:
    if coeff == 1:
        return target
    if coeff == -1:
        return f"-{target}"
    return f"{_scalar_text(coeff)}*{target}"


def render(doc: AlgebraDoc) -> str:
    """Canonical text; ``parse(render(doc)) == doc``."""
    lines = [f"algebra {doc.name} {{"]
    params = ", ".join(f"{p} > 0" if pos else p for p, pos in doc.params)
    lines.append(f"  params: {params};" if params else "  params: ;")
    lines.append(f"  dim: {doc.dim};")
    lines.append(f"  frame: {' '.join(doc.frame)};")
    lines.append("  brackets:")
    for (left, right), terms in doc.brackets:
        rhs = " + ".join(_term_text(t, c) for t, c in terms) if terms else f"0*{doc.frame[0]}"
        lines.append(f"    [{left}, {right}] = {rhs};")
    lines.append("  ;")
    if doc.structure == "standard":
        lines.append("  structure: standard;")
    else:
        lines.append("  structure: explicit {")
        for i, m in enumerate(doc.structure, start=1):
            rows = ", ".join("[" + ", ".join(_scalar_text(as_expr(x)) for x in row) + "]" for row in m)
            lines.append(f"    phi{i}: [{rows}];")
        lines.append("  };")
    lines.append("}")
    return "\n".join(lines) + "\n"
