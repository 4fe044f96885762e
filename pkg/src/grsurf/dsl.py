"""A small expression language for meridian functions of ``u``.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := ("-")? power
    power  := atom ("^" factor)?
    atom   := number | "u" | func "(" expr ")" | "(" expr ")"
    func   := sin | cos | tan | asin | atan | sinh | cosh | ln | exp | sqrt | abs

``^`` binds tighter than unary minus and is right-associative, so ``-u^2``
is ``-(u^2)`` and ``2^3^2`` is ``2^(3^2)``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Union

from . import jet
from .errors import ParseError
from .jet import Jet2

FUNC_NAMES = tuple(jet.FUNCTIONS)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call:
    func: str
    arg: Expr


Expr = Union[Num, Var, Neg, BinOp, Call]


def tokenize(src):
    """Yield ``(kind, text, pos)`` triples; kinds are number, name, op, end."""
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            yield kind, m.group(), pos
        pos = m.end()
    yield "end", "", pos


class _Parser:
    def __init__(self, src):
        self.tokens = list(tokenize(src))
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, *ops):
        kind, text, _ = self.tok
        return kind == "op" and text in ops

    def expect_op(self, op):
        kind, text, pos = self.tok
        if kind != "op" or text != op:
            found = "end of input" if kind == "end" else repr(text)
            raise ParseError(f"expected {op!r}, found {found}", pos)
        self.advance()

    def parse(self):
        node = self.expr()
        kind, text, pos = self.tok
        if kind != "end":
            raise ParseError(f"unexpected token {text!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while self.at_op("+", "-"):
            op = self.advance()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.at_op("*", "/"):
            op = self.advance()[1]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        if self.at_op("-"):
            self.advance()
            return Neg(self.power())
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            return BinOp("^", base, self.factor())
        return base

    def atom(self):
        kind, text, pos = self.tok
        if kind == "number":
            self.advance()
            value = float(text)
            if not math.isfinite(value):
                raise ParseError(f"numeric literal {text!r} is not finite", pos)
            return Num(value)
        if kind == "name":
            self.advance()
            if text == "u":
                return Var()
            if text in jet.FUNCTIONS:
                self.expect_op("(")
                arg = self.expr()
                self.expect_op(")")
                return Call(text, arg)
            raise ParseError(f"unknown identifier {text!r}", pos)
        if self.at_op("("):
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        found = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"expected a number, 'u', a function or '(', found {found}", pos)


def parse_meridian(src):
    """Parse an expression in ``u`` into an AST."""
    return _Parser(src).parse()


def to_source(node):
    """Render an AST back to source; the output reparses to an equal AST."""
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return "u"
    if isinstance(node, Neg):
        return f"(-{to_source(node.operand)})"
    if isinstance(node, BinOp):
        return f"({to_source(node.left)}{node.op}{to_source(node.right)})"
    if isinstance(node, Call):
        return f"{node.func}({to_source(node.arg)})"
    raise TypeError(f"not an expression node: {node!r}")


def compile_jet(node) -> Callable[[Jet2], Jet2]:
    """Turn an AST into a closure mapping the jet of ``u`` to the jet of the expression."""
    if isinstance(node, Num):
        c = Jet2.const(node.value)
        return lambda x: c
    if isinstance(node, Var):
        return lambda x: x
    if isinstance(node, Neg):
        inner = compile_jet(node.operand)
        return lambda x: -inner(x)
    if isinstance(node, Call):
        fn = jet.FUNCTIONS[node.func]
        inner = compile_jet(node.arg)
        return lambda x: fn(inner(x))
    if isinstance(node, BinOp):
        left = compile_jet(node.left)
        if node.op == "^" and isinstance(node.right, (Num, Neg)) and _is_constant(node.right):
            p = _constant_value(node.right)
            return lambda x: jet.power_const(left(x), p)
        right = compile_jet(node.right)
        if node.op == "+":
            return lambda x: left(x) + right(x)
        if node.op == "-":
            return lambda x: left(x) - right(x)
        if node.op == "*":
            return lambda x: left(x) * right(x)
        if node.op == "/":
            return lambda x: left(x) / right(x)
        if node.op == "^":
            return lambda x: left(x) ** right(x)
    raise TypeError(f"not an expression node: {node!r}")


def _is_constant(node):
    if isinstance(node, Num):
        return True
    if isinstance(node, Neg):
        return _is_constant(node.operand)
    return False


def _constant_value(node):
    if isinstance(node, Num):
        return node.value
    return -_constant_value(node.operand)


def evaluate(node, u):
    """Evaluate an AST at ``u`` and return its :class:`Jet2`."""
    return compile_jet(node)(Jet2.var(u))
