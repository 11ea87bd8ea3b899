"""Polynomial expression parser and canonical printer.

Grammar (whitespace-insensitive)::

    vector := '[' expr (',' expr)* ']'
    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := NUMBER ['/' NUMBER] | NAME | '(' expr ')'

Module elements are written either as a bracketed list of components or with
basis markers ``e1 .. em`` (``x*e1 + y^2*e2``).
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .polycore import Polynomial, term_order_key

_TOKEN = re.compile(r"(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")
_SPACE = re.compile(r"\s*")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.message = message
        self.position = position
        before = text[:position]
        self.line = before.count("\n") + 1
        self.column = position - (before.rfind("\n") + 1) + 1
        super().__init__(f"{message} at position {position} (line {self.line}, column {self.column})")


def _tokenize(text: str) -> list:
    tokens = []
    pos = _SPACE.match(text, 0).end()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", num, pos))
        elif name is not None:
            tokens.append(("name", name, pos))
        else:
            tokens.append(("op", op, pos))
        pos = _SPACE.match(text, m.end()).end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.names = {v: i for i, v in enumerate(names)}
        self.n = len(names)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        if tok[0] == "end":
            message = f"{message}: unexpected end of input"
        raise ParseError(message, self.text, tok[2])

    def expect(self, op):
        tok = self.peek()
        if tok != ("op", op, tok[2]):
            self.error(f"expected '{op}'")
        return self.take()

    def at(self, op) -> bool:
        tok = self.peek()
        return tok[0] == "op" and tok[1] == op

    def expr(self) -> Polynomial:
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.at("*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.at("^"):
            self.take()
            tok = self.peek()
            if tok[0] != "num" or not tok[1].isdigit():
                self.error("exponent must be a non-negative integer")
            self.take()
            base = base ** int(tok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            value = Fraction(tok[1])
            if self.at("/"):
                self.take()
                den = self.peek()
                if den[0] != "num":
                    self.error("expected a number after '/'")
                self.take()
                if Fraction(den[1]) == 0:
                    self.error("division by zero", den)
                value /= Fraction(den[1])
            return Polynomial.constant(self.n, value)
        if tok[0] == "name":
            if tok[1] not in self.names:
                self.error(f"unknown variable '{tok[1]}'")
            self.take()
            return Polynomial.variable(self.n, self.names[tok[1]])
        if self.at("("):
            self.take()
            inner = self.expr()
            self.expect(")")
            return inner
        self.error("expected a number, variable or '('")

    def finish(self):
        if self.peek()[0] != "end":
            self.error("unexpected token")


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    p = _Parser(text, variables)
    out = p.expr()
    p.finish()
    return out


def _markers(variables, rank):
    return [f"e{j + 1}" for j in range(rank) if f"e{j + 1}" not in variables]


def parse_vector(text: str, variables: Sequence[str], rank: int) -> list:
    """Parse a module element into ``rank`` component polynomials."""
    n = len(variables)
    if text.strip().startswith("["):
        p = _Parser(text, variables)
        p.expect("[")
        comps = [p.expr()]
        while p.at(","):
            p.take()
            comps.append(p.expr())
        p.expect("]")
        p.finish()
        if len(comps) != rank:
            raise ParseError(f"expected {rank} components, got {len(comps)}", text, 0)
        return comps
    markers = _markers(variables, rank)
    if len(markers) != rank:
        raise ParseError("basis markers e1..em clash with variable names; use [f1, ...] syntax", text, 0)
    full = parse_polynomial(text, list(variables) + markers)
    if rank == 1 and all(sum(a[n:]) == 0 for a, _ in full.items()):
        return [Polynomial(n, {a[:n]: c for a, c in full.items()})]
    parts = [dict() for _ in range(rank)]
    for a, c in full.items():
        if sum(a[n:]) != 1:
            raise ParseError(f"term {format_polynomial(Polynomial.monomial(a, c), list(variables) + markers)} "
                             f"needs exactly one basis marker", text, 0)
        j = a[n:].index(1)
        parts[j][a[:n]] = c
    return [Polynomial(n, t) for t in parts]


def parse_expression(text: str, variables: Sequence[str], rank: int | None = None):
    """Polynomial for plain input; list of components for vector input or ``rank`` given."""
    if rank is None and not text.strip().startswith("["):
        return parse_polynomial(text, variables)
    if rank is None:
        rank = text.count(",") + 1
    return parse_vector(text, variables, rank)


def _monomial_text(alpha, variables) -> str:
    parts = []
    for name, a in zip(variables, alpha):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, variables: Sequence[str]) -> str:
    """Canonical text: graded-lex descending terms, explicit rational coefficients, no spaces."""
    if f.is_zero():
        return "0"
    out = []
    for alpha in sorted((a for a, _ in f.items()), key=term_order_key):
        c = f.coefficient(alpha)
        mono = _monomial_text(alpha, variables)
        if not mono:
            term = str(c)
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            term = f"{c}*{mono}"
        if out and not term.startswith("-"):
            term = "+" + term
        out.append(term)
    return "".join(out)


def format_vector(components: Sequence[Polynomial], variables: Sequence[str]) -> str:
    if len(components) == 1:
        return format_polynomial(components[0], variables)
    return "[" + ", ".join(format_polynomial(c, variables) for c in components) + "]"
