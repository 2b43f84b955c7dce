"""The construction expression language: parser, printer, evaluator.

Grammar (whitespace insensitive, one expression per input):

    expr := "S" "(" nat ")" | "CP" "(" nat ")" | "Sigma" "(" nat ")"
          | "L" "(" nat "," nat ")" | "N" "(" nat ")" | "IHS3"
          | "E" "(" nat "," int ")"
          | "spin" "(" nat "," expr ")"
          | "csum" "(" expr "," expr ")"
          | "prod" "(" expr "," expr ")"

Printing an AST with ``str`` round-trips through :func:`parse`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import construct
from .construct import (
    CP,
    Bundle,
    CSum,
    ConstructionExpr,
    DehnRHS,
    IHS3,
    Lens,
    ManifoldDescriptor,
    Prod,
    Sphere,
    Spin,
    Surface,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str  # "name" | "int" | "(" | ")" | "," | "end"
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*|-?\d+|[(),]|\S")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line_starts = [0] + [i + 1 for i, ch in enumerate(text) if ch == "\n"]

    def position(offset: int) -> tuple[int, int]:
        line = max(i for i, start in enumerate(line_starts) if start <= offset)
        return line + 1, offset - line_starts[line] + 1

    for match in _TOKEN_RE.finditer(text):
        tok = match.group()
        line, col = position(match.start())
        if tok in "(),":
            tokens.append(_Token(tok, tok, line, col))
        elif re.fullmatch(r"-?\d+", tok):
            tokens.append(_Token("int", tok, line, col))
        elif tok[0].isalpha():
            tokens.append(_Token("name", tok, line, col))
        else:
            raise ParseError(f"unexpected character {tok!r}", line, col)
    end_line, end_col = position(len(text)) if text else (1, 1)
    tokens.append(_Token("end", "", end_line, end_col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            shown = tok.text or "end of input"
            raise ParseError(
                f"expected {what or kind!r}, found {shown!r}", tok.line, tok.column
            )
        return self.advance()

    def parse_int(self, nonnegative: bool = False) -> int:
        tok = self.expect("int", "an integer")
        value = int(tok.text)
        if nonnegative and value < 0:
            raise ParseError(f"expected a nonnegative integer, found {value}", tok.line, tok.column)
        return value

    def parse_expr(self) -> ConstructionExpr:
        tok = self.expect("name", "a generator or combinator name")
        head = tok.text
        if head == "IHS3":
            return IHS3()
        self.expect("(")
        node: ConstructionExpr
        if head == "S":
            node = Sphere(self.parse_int(nonnegative=True))
        elif head == "CP":
            node = CP(self.parse_int(nonnegative=True))
        elif head == "Sigma":
            node = Surface(self.parse_int(nonnegative=True))
        elif head == "L":
            p = self.parse_int(nonnegative=True)
            self.expect(",")
            node = Lens(p, self.parse_int(nonnegative=True))
        elif head == "N":
            node = DehnRHS(self.parse_int(nonnegative=True))
        elif head == "E":
            m = self.parse_int(nonnegative=True)
            self.expect(",")
            node = Bundle(m, self.parse_int())
        elif head == "spin":
            r = self.parse_int(nonnegative=True)
            self.expect(",")
            node = Spin(r, self.parse_expr())
        elif head == "csum":
            left = self.parse_expr()
            self.expect(",")
            node = CSum(left, self.parse_expr())
        elif head == "prod":
            left = self.parse_expr()
            self.expect(",")
            node = Prod(left, self.parse_expr())
        else:
            raise ParseError(
                f"unknown name {head!r}; expected one of S, CP, Sigma, L, N, IHS3, E, spin, csum, prod",
                tok.line, tok.column,
            )
        self.expect(")")
        return node


def parse(text: str) -> ConstructionExpr:
    parser = _Parser(text)
    expr = parser.parse_expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError(
            f"unexpected trailing input {trailing.text!r}", trailing.line, trailing.column
        )
    return expr


def evaluate(ast: ConstructionExpr) -> ManifoldDescriptor:
    """Dispatch an AST into the construction calculus."""
    if isinstance(ast, Sphere):
        return construct.sphere(ast.n)
    if isinstance(ast, CP):
        return construct.cp(ast.n)
    if isinstance(ast, Surface):
        return construct.surface(ast.genus)
    if isinstance(ast, Lens):
        return construct.lens(ast.p, ast.dim)
    if isinstance(ast, DehnRHS):
        return construct.dehn_rhs(ast.p)
    if isinstance(ast, IHS3):
        return construct.ihs3()
    if isinstance(ast, Bundle):
        return construct.bundle(ast.m, ast.d)
    if isinstance(ast, Spin):
        return construct.spin(ast.r, evaluate(ast.child))
    if isinstance(ast, CSum):
        return construct.connected_sum(evaluate(ast.left), evaluate(ast.right))
    if isinstance(ast, Prod):
        return construct.product(evaluate(ast.left), evaluate(ast.right))
    raise TypeError(f"not a construction expression: {ast!r}")


def evaluate_text(text: str) -> ManifoldDescriptor:
    return evaluate(parse(text))
