"""
Recursive-descent parser for surreal expressions.

Grammar, loosest binding first::

    expr        := additive [ ("<" | "<=" | "==" | "><") additive ]
    additive    := multiplicative { ("+" | "-") multiplicative }
    multiplicative := unary { "*" unary }
    unary       := "-" unary | atom
    atom        := INT [ "/" INT ] | "s:" {"+" | "-"} | cut
                 | NAME "(" expr ")" | "(" expr ")"
    cut         := "{" [ expr { "," expr } ] "|" [ expr { "," expr } ] "}"

``|`` only appears inside braces. ``p/q`` is a dyadic literal, not a
division; q must be a power of two. Whitespace is insignificant.
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from surreal.core.errors import ExpressionSyntaxError

FUNCTIONS = ("value", "sign", "birthday", "canon")
COMPARISONS = ("<", "<=", "==", "><")

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<sign>s:[+-]*)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op><=|==|><|[<+\-*/{}|,()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class DyadicLit:
    num: int
    den: int


@dataclass(frozen=True)
class SignLit:
    signs: str


@dataclass(frozen=True)
class Cut:
    left: Tuple["Expr", ...]
    right: Tuple["Expr", ...]


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Compare:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    arg: "Expr"


Expr = Union[IntLit, DyadicLit, SignLit, Cut, Neg, BinOp, Compare, Call]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """
    Raises:
        ExpressionSyntaxError: On a character no token starts with
    """
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(position, "a number, name, operator or brace", text[position])
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def at(self, *texts: str) -> bool:
        token = self.peek()
        return token is not None and token.kind == "op" and token.text in texts

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, expected: str) -> ExpressionSyntaxError:
        token = self.peek()
        if token is None:
            return ExpressionSyntaxError(len(self.text), expected)
        return ExpressionSyntaxError(token.position, expected, token.text)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.fail(f"'{text}'")
        return self.advance()

    def parse(self) -> Expr:
        expr = self.expr()
        if self.peek() is not None:
            raise self.fail("end of input")
        return expr

    def expr(self) -> Expr:
        left = self.additive()
        if self.at(*COMPARISONS):
            op = self.advance().text
            left = Compare(op, left, self.additive())
        return left

    def additive(self) -> Expr:
        left = self.multiplicative()
        while self.at("+", "-"):
            op = self.advance().text
            left = BinOp(op, left, self.multiplicative())
        return left

    def multiplicative(self) -> Expr:
        left = self.unary()
        while self.at("*"):
            self.advance()
            left = BinOp("*", left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.at("-"):
            self.advance()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Expr:
        token = self.peek()
        if token is None:
            raise self.fail("an operand")
        if token.kind == "int":
            self.advance()
            if not self.at("/"):
                return IntLit(int(token.text))
            self.advance()
            den_token = self.peek()
            if den_token is None or den_token.kind != "int":
                raise self.fail("a denominator")
            self.advance()
            den = int(den_token.text)
            if den == 0 or den & (den - 1):
                raise ExpressionSyntaxError(
                    den_token.position,
                    "a power-of-two denominator (only dyadic rationals are finitely born)",
                    den_token.text,
                )
            return DyadicLit(int(token.text), den)
        if token.kind == "sign":
            self.advance()
            return SignLit(token.text[2:])
        if token.kind == "name":
            if token.text not in FUNCTIONS:
                raise self.fail("one of " + ", ".join(FUNCTIONS))
            self.advance()
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Call(token.text, arg)
        if self.at("("):
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if self.at("{"):
            self.advance()
            left = self.options("|")
            self.expect("|")
            right = self.options("}")
            self.expect("}")
            return Cut(left, right)
        raise self.fail("an operand")

    def options(self, closing: str) -> Tuple[Expr, ...]:
        if self.at(closing):
            return ()
        items = [self.expr()]
        while self.at(","):
            self.advance()
            items.append(self.expr())
        return tuple(items)


def parse(text: str) -> Expr:
    """
    Parse one expression.

    Raises:
        ExpressionSyntaxError: With the offending position and what was expected
    """
    return _Parser(text).parse()


def to_source(expr: Expr) -> str:
    """Fully parenthesized source that parses back to the same tree."""
    if isinstance(expr, IntLit):
        return str(expr.value)
    if isinstance(expr, DyadicLit):
        return f"{expr.num}/{expr.den}"
    if isinstance(expr, SignLit):
        return f"s:{expr.signs}"
    if isinstance(expr, Cut):
        left = ", ".join(to_source(e) for e in expr.left)
        right = ", ".join(to_source(e) for e in expr.right)
        return f"{{{left}|{right}}}"
    if isinstance(expr, Neg):
        return f"(-{to_source(expr.operand)})"
    if isinstance(expr, (BinOp, Compare)):
        return f"({to_source(expr.left)} {expr.op} {to_source(expr.right)})"
    if isinstance(expr, Call):
        return f"{expr.name}({to_source(expr.arg)})"
    raise TypeError(f"Not an expression: {expr!r}")
