"""Tokenizer and arithmetic-expression parser shared by scalars and the DSL.

The expression grammar is::

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary)*
    unary := ("-" | "+") unary | atom
    atom  := NUMBER | IDENT | "(" expr ")"

Values are combined with the ordinary Python operators, so the caller decides
what an identifier means (a parameter, a frame vector, ...).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import A3CError, DslSyntaxError

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\f\v]+)|(?P<nl>\n)|(?P<comment>\#[^\n]*)"
    r"|(?P<num>\d+(?:\.\d+)?)|(?P<id>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/()\[\]{},;:=<>])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "id", "op" or "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise DslSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind in ("num", "id", "op"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class TokenStream:
    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._i = 0

    def peek(self) -> Token:
        return self._tokens[self._i]

    def next(self) -> Token:
        tok = self._tokens[self._i]
        if tok.kind != "eof":
            self._i += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind in ("op", "id") and tok.text == text

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.next()
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if not self.at(text):
            found = tok.text or "end of input"
            raise DslSyntaxError(f"expected {text!r}, found {found!r}", tok.line, tok.col)
        return self.next()

    def expect_kind(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            found = tok.text or "end of input"
            raise DslSyntaxError(f"expected {what}, found {found!r}", tok.line, tok.col)
        return self.next()


def parse_expression(stream: TokenStream, resolve: Callable[[Token], object],
                     number: Callable[[Fraction], object]):
    """Parse one expression; identifiers go through ``resolve``, literals through ``number``."""

    def combine(tok, fn, *args):
        try:
            return fn(*args)
        except DslSyntaxError:
            raise
        except (A3CError, TypeError, ZeroDivisionError) as exc:
            raise DslSyntaxError(str(exc) or type(exc).__name__, tok.line, tok.col) from exc

    def expr():
        value = term()
        while stream.at("+") or stream.at("-"):
            op = stream.next()
            rhs = term()
            value = combine(op, (lambda a, b: a + b) if op.text == "+" else (lambda a, b: a - b), value, rhs)
        return value

    def term():
        value = unary()
        while stream.at("*") or stream.at("/"):
            op = stream.next()
            rhs = unary()
            value = combine(op, (lambda a, b: a * b) if op.text == "*" else (lambda a, b: a / b), value, rhs)
        return value

    def unary():
        if stream.at("-"):
            op = stream.next()
            return combine(op, lambda a: -a, unary())
        if stream.accept("+"):
            return unary()
        return atom()

    def atom():
        tok = stream.peek()
        if tok.kind == "num":
            stream.next()
            return number(Fraction(tok.text))
        if tok.kind == "id":
            stream.next()
            return resolve(tok)
        if stream.accept("("):
            value = expr()
            stream.expect(")")
            return value
        found = tok.text or "end of input"
        raise DslSyntaxError(f"expected an expression, found {found!r}", tok.line, tok.col)

    return expr()
