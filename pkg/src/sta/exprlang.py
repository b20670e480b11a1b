"""Small expression language for multivectors (CLI front end).

Grammar (whitespace insignificant, symbols case-sensitive):

    expr   := term (('+' | '-') term)*
    term   := factor (prodop factor)*      -- one operator kind per chain
    factor := unary ('^' int)?
    unary  := ('~' | '#' | '!' | '-')* atom
    atom   := number | symbol | call '(' expr ')' | '(' expr ')'

    prodop := '*' | 'o' | 'x' | '/\\' | '.'        (ASCII spellings)
    symbol := g0 g1 g2 g3 e1 e2 e3 I J i
    call   := exp | inv | matrix | det | grade0 .. grade4
    number := digits with an optional fractional part (no exponent)

The unicode operators (minus sign, ring operator, circled times, wedge,
middle dot) are accepted as aliases of '-', 'o', 'x', '/\\' and '.'.
Mixing different product operators inside one chain is a syntax error;
parenthesize instead (mixed geometric/symmetric products are a classic
reading hazard).  '~' is reversion, '#' grade involution, '!' complex
conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (E1, E2, E3, G0, G1, G2, G3, J_UNIT, Multivector,
                      PSEUDOSCALAR, antisym_product, exp as mv_exp, inner,
                      inverse, sym_product, wedge)
from .errors import EvalError, ParseError
from .matrices import det4, to_matrix

SYMBOLS = {
    "g0": G0, "g1": G1, "g2": G2, "g3": G3,
    "e1": E1, "e2": E2, "e3": E3,
    "I": PSEUDOSCALAR, "J": J_UNIT, "i": Multivector.scalar(1j),
}

CALLS = ("exp", "inv", "matrix", "det",
         "grade0", "grade1", "grade2", "grade3", "grade4")

PRODUCT_OPS = ("*", "o", "x", "/\\", ".")

_UNICODE_ALIASES = {
    "−": "-",       # minus sign
    "∘": "o",       # ring operator
    "⊗": "x",       # circled times
    "∧": "/\\",     # logical and / wedge
    "·": ".",       # middle dot
}


# ---- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Unary:
    op: str
    child: object


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Product:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Sum:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    fn: str
    arg: object


@dataclass(frozen=True)
class MatrixValue:
    """4x4 display value produced by the matrix() call."""

    entries: tuple


# ---- tokenizer -------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str      # NUMBER NAME OP END
    text: str
    pos: int


def tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        alias = _UNICODE_ALIASES.get(ch)
        if alias is not None:
            kind = "NAME" if alias in ("o", "x") else "OP"
            tokens.append(_Token(kind, alias, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "." and j + 1 < n and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            tokens.append(_Token("NUMBER", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", text[i:j], i))
            i = j
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "\\":
            tokens.append(_Token("OP", "/\\", i))
            i += 2
            continue
        if ch in "+-*.^~#!()":
            tokens.append(_Token("OP", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {text[i]!r}", i,
                         expected=("operator", "number", "symbol"))
    tokens.append(_Token("END", "", n))
    return tokens


# ---- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.k = 0

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def advance(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def fail(self, message, expected):
        tok = self.peek()
        raise ParseError(f"{message} at offset {tok.pos}", tok.pos,
                         expected=expected)

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            self.fail(f"unexpected token {tok.text!r}",
                      expected=("+", "-", "product operator", "end of input"))
        return node

    def expr(self):
        node = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text in ("+", "-"):
                self.advance()
                node = Sum(tok.text, node, self.term())
            else:
                return node

    def _product_op(self, tok: _Token):
        if tok.kind == "OP" and tok.text in ("*", ".", "/\\"):
            return tok.text
        if tok.kind == "NAME" and tok.text in ("o", "x"):
            return tok.text
        return None

    def term(self):
        node = self.factor()
        chain_op = None
        while True:
            tok = self.peek()
            op = self._product_op(tok)
            if op is None:
                return node
            if chain_op is None:
                chain_op = op
            elif op != chain_op:
                raise ParseError(
                    f"mixed product operators {chain_op!r} and {op!r} need "
                    f"parentheses (offset {tok.pos})", tok.pos,
                    expected=(chain_op,))
            self.advance()
            node = Product(op, node, self.factor())

    def factor(self):
        node = self.unary()
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "^":
            self.advance()
            sign = 1
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "-":
                self.advance()
                sign = -1
                tok = self.peek()
            if tok.kind != "NUMBER" or "." in tok.text:
                self.fail("expected integer exponent", expected=("integer",))
            self.advance()
            node = Power(node, sign * int(tok.text))
        return node

    def unary(self):
        tok = self.peek()
        if tok.kind == "OP" and tok.text in ("~", "#", "!", "-"):
            self.advance()
            return Unary(tok.text, self.unary())
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok.kind == "NUMBER":
            self.advance()
            return Num(float(tok.text))
        if tok.kind == "NAME":
            if tok.text in CALLS:
                self.advance()
                opening = self.peek()
                if not (opening.kind == "OP" and opening.text == "("):
                    self.fail(f"call {tok.text!r} needs parentheses",
                              expected=("(",))
                self.advance()
                arg = self.expr()
                closing = self.peek()
                if not (closing.kind == "OP" and closing.text == ")"):
                    self.fail("unclosed call", expected=(")",))
                self.advance()
                return Call(tok.text, arg)
            if tok.text in SYMBOLS:
                self.advance()
                return Sym(tok.text)
            raise ParseError(f"unknown symbol {tok.text!r} at offset {tok.pos}",
                             tok.pos, expected=tuple(sorted(SYMBOLS)) + CALLS)
        if tok.kind == "OP" and tok.text == "(":
            self.advance()
            node = self.expr()
            closing = self.peek()
            if not (closing.kind == "OP" and closing.text == ")"):
                self.fail("unclosed parenthesis", expected=(")",))
            self.advance()
            return node
        self.fail(f"expected a value, found {tok.text!r}" if tok.kind != "END"
                  else "expected a value, found end of input",
                  expected=("number", "symbol", "(", "call"))


def parse(text: str):
    """Parse an expression; raises ParseError with offset and expected set."""
    return _Parser(text).parse()


# ---- evaluation ------------------------------------------------------------


_PRODUCT_FUNCS = {
    "*": lambda a, b: a * b,
    "o": sym_product,
    "x": antisym_product,
    "/\\": wedge,
    ".": inner,
}

_UNARY_FUNCS = {
    "~": lambda g: g.reverse(),
    "#": lambda g: g.involute(),
    "!": lambda g: g.conj(),
    "-": lambda g: -g,
}


def _need_mv(value, context):
    if isinstance(value, MatrixValue):
        raise EvalError(f"matrix value cannot be used inside {context}")
    return value


def evaluate(node):
    """Evaluate an AST to a Multivector (or MatrixValue from matrix())."""
    if isinstance(node, Num):
        return Multivector.scalar(node.value)
    if isinstance(node, Sym):
        return SYMBOLS[node.name]
    if isinstance(node, Unary):
        return _UNARY_FUNCS[node.op](_need_mv(evaluate(node.child),
                                              "a conjugation"))
    if isinstance(node, Power):
        return _need_mv(evaluate(node.base), "a power") ** node.exponent
    if isinstance(node, Product):
        left = _need_mv(evaluate(node.left), "a product")
        right = _need_mv(evaluate(node.right), "a product")
        return _PRODUCT_FUNCS[node.op](left, right)
    if isinstance(node, Sum):
        left = _need_mv(evaluate(node.left), "a sum")
        right = _need_mv(evaluate(node.right), "a sum")
        return left + right if node.op == "+" else left - right
    if isinstance(node, Call):
        arg = _need_mv(evaluate(node.arg), "a call")
        if node.fn == "exp":
            return mv_exp(arg)
        if node.fn == "inv":
            return inverse(arg)
        if node.fn == "det":
            return Multivector.scalar(det4(to_matrix(arg)))
        if node.fn == "matrix":
            m = to_matrix(arg)
            return MatrixValue(tuple(tuple(complex(z) for z in row)
                                     for row in m))
        if node.fn.startswith("grade"):
            return arg.grade(int(node.fn[5]))
    raise EvalError(f"cannot evaluate node {node!r}")


def evaluate_text(text: str):
    return evaluate(parse(text))


# ---- canonical printing ----------------------------------------------------


def to_text(node) -> str:
    """Fully parenthesized ASCII rendering; reparsing gives an equal AST."""
    if isinstance(node, Num):
        v = node.value
        return f"{int(v)}" if v == int(v) else repr(v)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Unary):
        return f"{node.op}{to_text(node.child)}"
    if isinstance(node, Power):
        return f"{to_text(node.base)}^{node.exponent}"
    if isinstance(node, Product):
        return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
    if isinstance(node, Sum):
        return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
    if isinstance(node, Call):
        return f"{node.fn}({to_text(node.arg)})"
    raise TypeError(f"not an AST node: {node!r}")
