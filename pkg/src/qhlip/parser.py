"""Polynomial expression parser and printer.

Grammar: integers, rationals p/q, variables X and Y (bivariate) or t
(univariate), operators + - * ^ with non-negative integer exponents, and
parentheses.  Whitespace is ignored.  Other identifiers are parameters and
must be bound to rationals before parsing.  Decimal literals are rejected;
inputs are exact by contract.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Optional, Union

from .polyalg import BiPoly, UniPoly

Poly = Union[UniPoly, BiPoly]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if rest.startswith("."):
                raise ParseError(
                    "decimal literals are not supported; write an exact rational p/q",
                    pos,
                )
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "num":
            after = m.end()
            if after < len(text) and text[after] == ".":
                raise ParseError(
                    "decimal literals are not supported; write an exact rational p/q",
                    m.start("num"),
                )
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.lastgroup == "ident":
            tokens.append(("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Mapping[str, Poly], one: Poly,
                 bindings: Mapping[str, Fraction]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = variables
        self.one = one
        self.bindings = bindings

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)
        self.advance()

    def parse(self) -> Poly:
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {val!r}", pos)
        return value

    def expr(self) -> Poly:
        value = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self) -> Poly:
        value = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                value = value * self.unary()
            elif kind == "op" and val == "/":
                raise ParseError(
                    "'/' is only allowed between integer literals (rational p/q)", pos
                )
            else:
                return value

    def unary(self) -> Poly:
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, val, pos = self.peek()
            if kind == "op" and val == "-":
                raise ParseError("negative exponents are not allowed", pos)
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer", pos)
            self.advance()
            exp = int(val)
            out = self.one
            for _ in range(exp):
                out = out * base
            return out
        return base

    def atom(self) -> Poly:
        kind, val, pos = self.advance()
        if kind == "num":
            value = Fraction(int(val))
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.advance()
                k3, v3, p3 = self.advance()
                if k3 != "num":
                    raise ParseError("rational literal needs an integer denominator", p3)
                if int(v3) == 0:
                    raise ParseError("zero denominator", p3)
                value /= int(v3)
            return self.one * value
        if kind == "ident":
            if val in self.variables:
                return self.variables[val]
            if val in self.bindings:
                return self.one * self.bindings[val]
            raise ParseError(f"unbound identifier {val!r}", pos)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token {val or 'end of input'!r}", pos)


def parse_uni(text: str, bindings: Optional[Mapping[str, Fraction]] = None) -> UniPoly:
    """Parse a univariate polynomial in t."""
    p = _Parser(
        text,
        variables={"t": UniPoly.var()},
        one=UniPoly.one(),
        bindings=bindings or {},
    )
    return p.parse()


def parse_bi(text: str, bindings: Optional[Mapping[str, Fraction]] = None) -> BiPoly:
    """Parse a bivariate polynomial in X, Y."""
    p = _Parser(
        text,
        variables={"X": BiPoly.monomial(1, 0), "Y": BiPoly.monomial(0, 1)},
        one=BiPoly.monomial(0, 0),
        bindings=bindings or {},
    )
    return p.parse()


def parse_rational(text: str) -> Fraction:
    """Parse an integer or p/q literal (no decimals)."""
    text = text.strip()
    m = re.fullmatch(r"(-?\d+)\s*(?:/\s*(-?\d+))?", text)
    if m is None:
        raise ParseError(
            "expected an exact rational like -3 or 5/2 (decimals are not supported)", 0
        )
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError("zero denominator", 0)
    return Fraction(num, den)


def _coeff_prefix(c: Fraction, monomial: str) -> str:
    if monomial == "":
        return str(c)
    if c == 1:
        return monomial
    if c == -1:
        return "-" + monomial
    return f"{c}*{monomial}"


def print_uni(p: UniPoly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if c == 0:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        parts.append(_coeff_prefix(c, mono))
    return _join_signed(parts)


def print_bi(p: BiPoly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for (i, j), c in sorted(p.terms.items(), reverse=True):
        factors = []
        if i:
            factors.append("X" if i == 1 else f"X^{i}")
        if j:
            factors.append("Y" if j == 1 else f"Y^{j}")
        parts.append(_coeff_prefix(c, "*".join(factors)))
    return _join_signed(parts)


def _join_signed(parts: list[str]) -> str:
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out
