"""Parser and evaluator for quantum-torus expressions.

Grammar (whitespace is ignored, ``*`` is mandatory)::

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := ("-" | "+") unary | power
    power    := atom ("^" exponent)?
    exponent := ["-" | "+"] INT | "(" ["-" | "+"] INT ")"
    atom     := INT | "x" | "y" | "q" | "(" expr ")"
              | "[" expr "," expr "]" ("_" atom)?

``[u, v]`` is the commutator uv - vu and ``[u, v]_r`` the r-commutator
r uv - r^-1 vu; ``r`` must be free of x and y, as must any divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .qfield import Q, RatFunc
from .torus import TorusElement, X, Y, commutator, r_commutator

__all__ = ["ParseError", "EvalError", "parse_expr", "eval_expr", "evaluate"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class EvalError(ValueError):
    pass


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    name: str  # "x", "y" or "q"


@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Div:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


@dataclass(frozen=True)
class Commutator:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class RCommutator:
    left: "Node"
    right: "Node"
    r: "Node"


Node = Union[Gen, Int, Neg, Add, Sub, Mul, Div, Pow, Commutator, RCommutator]


def _has_generator(node: Node) -> bool:
    if isinstance(node, Gen):
        return node.name in ("x", "y")
    if isinstance(node, Int):
        return False
    if isinstance(node, (Neg,)):
        return _has_generator(node.operand)
    if isinstance(node, Pow):
        return _has_generator(node.base)
    if isinstance(node, RCommutator):
        return _has_generator(node.left) or _has_generator(node.right) or _has_generator(node.r)
    return _has_generator(node.left) or _has_generator(node.right)


# -- tokenizer ----------------------------------------------------------------

_SINGLE = set("+-*/^()[],_")
_NAMES = {"x", "y", "q"}


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "name", an operator character, or "end"
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Tok]:
    toks = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            i += 1
            line, col = line + 1, 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            toks.append(_Tok("int", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(src) and src[j].isalnum():
                j += 1
            word = src[i:j]
            if word not in _NAMES:
                raise ParseError(f"unknown name {word!r}", line, start_col)
            toks.append(_Tok("name", word, line, start_col))
            col += j - i
            i = j
            continue
        if ch in _SINGLE:
            toks.append(_Tok(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start_col)
    toks.append(_Tok("end", "", line, col))
    return toks


# -- parser -------------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.pos = 0

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"expected {kind!r}, found {found}", tok.line, tok.col)
        return self.next()

    def error(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.col)

    def parse(self) -> Node:
        if self.peek().kind == "end":
            raise self.error("empty expression")
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            if tok.kind in ("int", "name", "(", "["):
                raise self.error("missing '*' between factors")
            raise self.error(f"unexpected {tok.text!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.next()
            rhs = self.unary()
            if op.kind == "/":
                if _has_generator(rhs):
                    raise ParseError("divisor must not contain x or y", op.line, op.col)
                node = Div(node, rhs)
            else:
                node = Mul(node, rhs)
        return node

    def unary(self) -> Node:
        kind = self.peek().kind
        if kind == "-":
            self.next()
            return Neg(self.unary())
        if kind == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek().kind == "^":
            self.next()
            return Pow(base, self.exponent())
        return base

    def exponent(self) -> int:
        paren = self.peek().kind == "("
        if paren:
            self.next()
        sign = 1
        if self.peek().kind in ("-", "+"):
            sign = -1 if self.next().kind == "-" else 1
        tok = self.peek()
        if tok.kind != "int":
            raise self.error("exponent must be an integer")
        self.next()
        if paren:
            self.expect(")")
        return sign * int(tok.text)

    def atom(self) -> Node:
        tok = self.peek()
        if tok.kind == "int":
            self.next()
            return Int(int(tok.text))
        if tok.kind == "name":
            self.next()
            return Gen(tok.text)
        if tok.kind == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "[":
            self.next()
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            if self.peek().kind == "_":
                self.next()
                r_tok = self.peek()
                r = self.atom()
                if _has_generator(r):
                    raise ParseError("r-commutator parameter must not contain x or y",
                                     r_tok.line, r_tok.col)
                return RCommutator(left, right, r)
            return Commutator(left, right)
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise self.error(f"expected an operand, found {found}")


def parse_expr(src: str) -> Node:
    return _Parser(src).parse()


# -- evaluation ---------------------------------------------------------------


def _scalar(u: TorusElement, what: str) -> RatFunc:
    if not u.is_scalar():
        raise EvalError(f"{what} must be a scalar")
    return u.scalar_part()


def eval_expr(node: Node) -> TorusElement:
    if isinstance(node, Int):
        return TorusElement.scalar(node.value)
    if isinstance(node, Gen):
        return {"x": X, "y": Y, "q": TorusElement.scalar(Q)}[node.name]
    if isinstance(node, Neg):
        return -eval_expr(node.operand)
    if isinstance(node, Add):
        return eval_expr(node.left) + eval_expr(node.right)
    if isinstance(node, Sub):
        return eval_expr(node.left) - eval_expr(node.right)
    if isinstance(node, Mul):
        return eval_expr(node.left) * eval_expr(node.right)
    if isinstance(node, Div):
        d = _scalar(eval_expr(node.right), "divisor")
        if not d:
            raise EvalError("division by zero")
        return eval_expr(node.left).scale(d.inv())
    if isinstance(node, Pow):
        base = eval_expr(node.base)
        if node.exp < 0 and len(base) != 1:
            raise EvalError("negative powers need a single-term base")
        return base ** node.exp
    if isinstance(node, Commutator):
        return commutator(eval_expr(node.left), eval_expr(node.right))
    if isinstance(node, RCommutator):
        r = _scalar(eval_expr(node.r), "r-commutator parameter")
        if not r:
            raise EvalError("r-commutator parameter must be nonzero")
        return r_commutator(eval_expr(node.left), eval_expr(node.right), r)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(src: str) -> TorusElement:
    return eval_expr(parse_expr(src))
