"""Recursive-descent parser for identity expressions.

Grammar::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := [rational '*'] factor
    factor  := primary ['*' primary]
    primary := ident | '(' expr ')' | ('T'|'J'|'A') '(' expr ',' expr ',' expr ')'

The product is nonassociative, so a factor holds at most one bare product:
``a*b*c`` is rejected and must be written ``(a*b)*c`` or ``a*(b*c)``.
``T``, ``J`` and ``A`` are the triple ``(ab)c - a(bc) + b(ac)``, the Jacobian
and the associator.  The literal ``0`` is the zero polynomial.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from ..freealgebra import Poly, associator, jacobian, triple, var

__all__ = [
    "Call",
    "ExprAst",
    "Neg",
    "ParseError",
    "Prod",
    "Scale",
    "Sum",
    "Var",
    "Zero",
    "lower",
    "parse",
    "parse_expression",
    "parse_vector_expression",
]

BUILTINS = {"T": triple, "J": jacobian, "A": associator}


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Neg:
    arg: "ExprAst"


@dataclass(frozen=True)
class Sum:
    args: tuple


@dataclass(frozen=True)
class Scale:
    coeff: Fraction
    arg: "ExprAst"


@dataclass(frozen=True)
class Prod:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


ExprAst = Union[Var, Zero, Neg, Sum, Scale, Prod, Call]

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*(),])"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            if "\n" in chunk:
                line += chunk.count("\n")
                line_start = pos + chunk.rindex("\n") + 1
        else:
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    toks.append(_Tok("end", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, offset: int = 0) -> _Tok:
        return self.toks[min(self.i + offset, len(self.toks) - 1)]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.line, tok.col)

    def expect(self, text: str) -> _Tok:
        t = self.peek()
        if t.text != text:
            found = "end of input" if t.kind == "end" else repr(t.text)
            self.error(f"expected {text!r}, found {found}")
        return self.next()

    def parse(self) -> ExprAst:
        if self.peek().kind == "end":
            self.error("empty expression")
        node = self.expr()
        if self.peek().kind != "end":
            t = self.peek()
            if t.text == "*":
                self.error("ambiguous product: parenthesize nonassociative products, e.g. (a*b)*c")
            self.error(f"unexpected {t.text!r}")
        return node

    def expr(self) -> ExprAst:
        terms = []
        sign = 1
        if self.peek().text in "+-" and self.peek().kind == "op":
            sign = -1 if self.next().text == "-" else 1
        t = self.term()
        terms.append(t if sign > 0 else Neg(t))
        while self.peek().kind == "op" and self.peek().text in ("+", "-"):
            op = self.next().text
            t = self.term()
            terms.append(t if op == "+" else Neg(t))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> ExprAst:
        t = self.peek()
        if t.kind == "num":
            self.next()
            try:
                coeff = Fraction(t.text.replace(" ", ""))
            except ZeroDivisionError:
                self.error("zero denominator", t)
            if self.peek().text != "*":
                if coeff == 0:
                    return Zero()
                self.error("a scalar must multiply an expression, e.g. 2*a", t)
            self.next()
            return Scale(coeff, self.factor())
        return self.factor()

    def factor(self) -> ExprAst:
        left = self.primary()
        if self.peek().text == "*":
            self.next()
            right = self.primary()
            if self.peek().text == "*":
                self.error("ambiguous product: parenthesize nonassociative products, e.g. (a*b)*c")
            return Prod(left, right)
        return left

    def primary(self) -> ExprAst:
        t = self.peek()
        if t.kind == "ident":
            self.next()
            if self.peek().text == "(":
                if t.text not in BUILTINS:
                    self.error(f"unknown builtin {t.text!r} (use T, J or A)", t)
                self.next()
                args = [self.expr()]
                for _ in range(2):
                    self.expect(",")
                    args.append(self.expr())
                if self.peek().text == ",":
                    self.error(f"{t.text} takes exactly 3 arguments")
                self.expect(")")
                return Call(t.text, tuple(args))
            return Var(t.text)
        if t.text == "(":
            self.next()
            inner = self.expr()
            self.expect(")")
            return inner
        if t.kind == "num":
            self.error("a number cannot be a factor; write the scalar first, e.g. 2*(a*b)", t)
        found = "end of input" if t.kind == "end" else repr(t.text)
        self.error(f"expected a variable, '(' or a builtin, found {found}")


def parse(text: str) -> ExprAst:
    if not isinstance(text, str):
        raise TypeError("expression must be a string")
    return _Parser(text).parse()


def lower(node: ExprAst, leaf: Callable, zero: Callable):
    """Evaluate the tree with ``leaf(name)`` for identifiers; values need ``+ - *``."""
    if isinstance(node, Var):
        return leaf(node.name)
    if isinstance(node, Zero):
        return zero()
    if isinstance(node, Neg):
        return -lower(node.arg, leaf, zero)
    if isinstance(node, Sum):
        out = lower(node.args[0], leaf, zero)
        for a in node.args[1:]:
            out = out + lower(a, leaf, zero)
        return out
    if isinstance(node, Scale):
        return lower(node.arg, leaf, zero).scale(node.coeff)
    if isinstance(node, Prod):
        return lower(node.left, leaf, zero) * lower(node.right, leaf, zero)
    if isinstance(node, Call):
        return BUILTINS[node.name](*(lower(a, leaf, zero) for a in node.args))
    raise TypeError(f"not an expression node: {node!r}")


def parse_expression(text: str) -> Poly:
    """Parse into a polynomial over free variables."""
    return lower(parse(text), var, Poly.zero)


def parse_vector_expression(text: str, algebra):
    """Parse with identifiers read as basis names of ``algebra``."""
    tree = parse(text)

    def leaf(name):
        if name not in algebra.basis_names:
            raise ParseError(f"unknown basis name {name!r}", *_locate(text, name))
        return algebra.basis(name)

    return lower(tree, leaf, algebra.zero)


def _locate(text: str, name: str) -> tuple:
    for tok in _tokenize(text):
        if tok.kind == "ident" and tok.text == name:
            return tok.line, tok.col
    return 1, 1
