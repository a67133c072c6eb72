"""Integer multivariate Laurent polynomials and their Newton polytopes.

Terms are a finite map from exponent vectors in Z^n to nonzero integer
coefficients; the zero polynomial is the empty map. The text grammar is
deliberately strict: explicit `*` for products and `^` for (possibly
negative) integer exponents, so multi-character variable names parse
unambiguously.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (DimensionMismatch, InvalidParameter, ParseError,
                     UnknownVariable, ZeroPolynomial)
from .geometry import IntegralPolytope, Point, canonical_hull


@dataclass
class LaurentPolynomial:
    dim: int
    terms: dict[Point, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(e): int(c) for e, c in self.terms.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.terms


def _merged(dim: int, raw: dict[Point, int]) -> LaurentPolynomial:
    return LaurentPolynomial(dim, {e: c for e, c in raw.items() if c})


def multiply(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """Exact convolution product over Z[x1^+-1, ..., xn^+-1]."""
    if f.dim != g.dim:
        raise DimensionMismatch(f"dimensions {f.dim} and {g.dim} differ")
    out: dict[Point, int] = {}
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return _merged(f.dim, out)


def newton_polytope(f: LaurentPolynomial) -> IntegralPolytope:
    """Hull of the support: the exponent vectors with nonzero coefficient.

    Turns multiplication into Minkowski sum, exactly, because products of
    nonzero integer Laurent polynomials never collapse to zero.
    """
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no Newton polytope")
    return canonical_hull(f.terms.keys(), f.dim)


_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = "int" if m.lastindex == 1 else "name" if m.lastindex == 2 else m.group(3)
        tokens.append((kind, m.group(m.lastindex), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over: expr := term (+|- term)*, term := factor
    (* factor)*, factor := sign* (int | name [^ exp] | parenthesized)."""

    def __init__(self, text: str, variables: list[str]):
        if len(set(variables)) != len(variables):
            raise InvalidParameter("variable names must be distinct")
        self.vars = {name: i for i, name in enumerate(variables)}
        self.dim = len(variables)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> dict:
        acc = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            for e, c in rhs.items():
                acc[e] = acc.get(e, 0) + (c if op == "+" else -c)
        return acc

    def term(self) -> dict:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            rhs = self.factor()
            out: dict = {}
            for e1, c1 in acc.items():
                for e2, c2 in rhs.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, 0) + c1 * c2
            acc = out
        return acc

    def factor(self) -> dict:
        sign = 1
        while self.peek()[0] in "+-":
            if self.take()[0] == "-":
                sign = -sign
        poly = self.atom()
        if sign < 0:
            poly = {e: -c for e, c in poly.items()}
        return poly

    def atom(self) -> dict:
        kind, value, pos = self.take()
        if kind == "int":
            return {(0,) * self.dim: int(value)}
        if kind == "name":
            if value not in self.vars:
                raise UnknownVariable(value, pos)
            exp = 1
            if self.peek()[0] == "^":
                self.take()
                exp = self.exponent()
            e = [0] * self.dim
            e[self.vars[value]] = exp
            return {tuple(e): 1}
        if kind == "(":
            poly = self.expr()
            kind, _, pos = self.take()
            if kind != ")":
                raise ParseError("expected ')'", pos)
            return poly
        raise ParseError(f"expected a number, variable or '(', got {value!r}"
                         if kind != "end" else "unexpected end of input", pos)

    def exponent(self) -> int:
        sign = 1
        if self.peek()[0] in "+-":
            if self.take()[0] == "-":
                sign = -1
        kind, value, pos = self.take()
        if kind != "int":
            raise ParseError("expected an integer exponent", pos)
        return sign * int(value)


def parse_laurent(text: str, variables: list[str]) -> LaurentPolynomial:
    """Parse, expand and collect; like terms merge and zero terms vanish."""
    parser = _Parser(text, list(variables))
    poly = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected {value!r}", pos)
    return _merged(parser.dim, poly)


def format_laurent(f: LaurentPolynomial, variables: list[str]) -> str:
    """Deterministic text form that parse_laurent maps back to f."""
    if len(variables) != f.dim:
        raise DimensionMismatch(
            f"{len(variables)} variable names for dimension {f.dim}")
    if f.is_zero():
        return "0"
    chunks = []
    for exp in sorted(f.terms):
        coef = f.terms[exp]
        mono = [f"{v}^{e}" if e != 1 else v
                for v, e in zip(variables, exp) if e != 0]
        if not mono or abs(coef) != 1:
            mono.insert(0, str(abs(coef)))
        chunks.append((coef < 0, "*".join(mono)))
    neg, body = chunks[0]
    out = ("-" if neg else "") + body
    for neg, body in chunks[1:]:
        out += (" - " if neg else " + ") + body
    return out
