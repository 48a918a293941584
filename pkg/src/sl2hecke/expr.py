"""Surface syntax for Hecke algebra elements: tokenizer, recursive-descent
parser, evaluator and the canonical printer.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" NAT)?
    atom   := "tau0" | "tau1" | "zeta" | "e(" INT ")" | "w(" INT ")" | "X(" INT ")"
            | "iota(" expr ")" | "J(" expr ")" | INT | "(" expr ")"

INT may carry a leading minus sign; NAT may not.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import ExprSyntaxError, UnknownAtom
from .field import FieldSpec


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Gen:
    name: str  # tau0 | tau1 | zeta


@dataclass(frozen=True)
class Indexed:
    name: str  # e | w | X
    index: int


@dataclass(frozen=True)
class Apply:
    name: str  # iota | J
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # + - *
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int


Expr = Union[Num, Gen, Indexed, Apply, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))")


def tokenize(src: str) -> list[tuple[str, str, int]]:
    """List of (kind, text, offset); kind is int, name, op or end."""
    out = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            start = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {src[start]!r}", start)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str):
        kind, val, off = self.peek()
        if val != text or kind == "end":
            what = "end of input" if kind == "end" else repr(val)
            raise ExprSyntaxError(f"expected {text!r}, found {what}", off)
        return self.take()

    def parse(self) -> Expr:
        e = self.expr()
        kind, val, off = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {val!r}", off)
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            left = BinOp("*", left, self.factor())
        return left

    def factor(self) -> Expr:
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            kind, val, off = self.peek()
            if kind != "int":
                raise ExprSyntaxError("exponent must be a nonnegative integer", off)
            self.take()
            return Pow(base, int(val))
        return base

    def integer(self) -> int:
        sign = 1
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            sign = -1
        kind, val, off = self.peek()
        if kind != "int":
            what = "end of input" if kind == "end" else repr(val)
            raise ExprSyntaxError(f"expected an integer, found {what}", off)
        self.take()
        return sign * int(val)

    def atom(self) -> Expr:
        kind, val, off = self.peek()
        if kind == "int" or (kind == "op" and val == "-" and self.toks[self.i + 1][0] == "int"):
            return Num(self.integer())
        if kind == "op" and val == "(":
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        if kind == "name":
            self.take()
            if val in ("tau0", "tau1", "zeta"):
                return Gen(val)
            if val in ("e", "w", "X"):
                self.expect("(")
                n = self.integer()
                self.expect(")")
                return Indexed(val, n)
            if val in ("iota", "J"):
                self.expect("(")
                e = self.expr()
                self.expect(")")
                return Apply(val, e)
            raise UnknownAtom(f"unknown atom {val!r}", off)
        what = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(f"expected an atom, found {what}", off)


def parse_expr(src: str) -> Expr:
    return _Parser(src).parse()


def evaluate(ast: Expr, spec: FieldSpec):
    from .centre import x_elem, zeta_elem
    from .hecke import HElem, e_elem, iota, jmap, tau, tau_omega

    def ev(node):
        if isinstance(node, Num):
            return HElem.scalar(spec, node.value)
        if isinstance(node, Gen):
            if node.name == "zeta":
                return zeta_elem(spec)
            return tau(spec, 0 if node.name == "tau0" else 1)
        if isinstance(node, Indexed):
            j = node.index % (spec.q - 1)
            if node.name == "e":
                return e_elem(spec, j)
            if node.name == "w":
                return tau_omega(spec, j)
            return x_elem(spec, j)
        if isinstance(node, Apply):
            inner = ev(node.arg)
            return iota(inner) if node.name == "iota" else jmap(inner)
        if isinstance(node, Pow):
            return ev(node.base) ** node.exp
        a, b = ev(node.left), ev(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        return a * b

    return ev(ast)


def eval_expr(src: str, spec: FieldSpec):
    return evaluate(parse_expr(src), spec)


def format_term(spec: FieldSpec, word, coeff: int) -> str:
    parts = [] if coeff == 1 else [spec.format_code(coeff)]
    parts.append(f"w({word.omega})")
    parts.extend(f"tau{l}" for l in word.letters())
    return "*".join(parts)


def format_helem(h) -> str:
    """Canonical printout: terms sorted by (len, first, omega), coefficients in [0, p)."""
    if not h.terms:
        return "0"
    return " + ".join(format_term(h.spec, w, h.terms[w]) for w in sorted(h.terms))


def format_ast(node: Expr) -> str:
    """Fully parenthesised source for an AST; parses back to the same tree."""
    if isinstance(node, Num):
        return str(node.value) if node.value >= 0 else f"({node.value})"
    if isinstance(node, Gen):
        return node.name
    if isinstance(node, Indexed):
        return f"{node.name}({node.index})"
    if isinstance(node, Apply):
        return f"{node.name}({format_ast(node.arg)})"
    if isinstance(node, Pow):
        return f"({format_ast(node.base)})^{node.exp}"
    return f"({format_ast(node.left)} {node.op} {format_ast(node.right)})"
