"""Evaluation of parsed expressions against an arena."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List

from surreal.cli.parser import BinOp, Call, Compare, Cut, DyadicLit, Expr, IntLit, Neg, SignLit
from surreal.core.arena import Arena, NodeId
from surreal.core.arithmetic import add, canonicalize, mul, neg, sub
from surreal.core.dyadic import Dyadic, from_dyadic, value
from surreal.core.errors import EvaluationError
from surreal.tree.signexp import SignSeq, decode, encode


class ResultKind(Enum):
    NUMBER = "number"
    BOOLEAN = "boolean"
    DYADIC = "dyadic"
    INTEGER = "integer"
    SIGNS = "signs"


@dataclass(frozen=True)
class Result:
    """An evaluated expression; ``value`` is a NodeId for NUMBER results."""
    kind: ResultKind
    value: Any


def render_canonical(arena: Arena, x: NodeId) -> str:
    """The canonical cut of x with options shown as dyadic values, e.g. ``{1/2|1}``."""
    node = arena.node(canonicalize(arena, x))
    left = ",".join(str(value(arena, l)) for l in node.left)
    right = ",".join(str(value(arena, r)) for r in node.right)
    return f"{{{left}|{right}}}"


class Evaluator:
    """Evaluates expressions bottom-up in one arena."""

    def __init__(self, arena: Arena):
        self.arena = arena

    def evaluate(self, expr: Expr) -> Result:
        """
        Raises:
            EvaluationError: If an operand has the wrong kind
            CutViolation: If a cut literal is not a valid cut
            ResourceLimit: If the node budget is exhausted
        """
        arena = self.arena
        if isinstance(expr, IntLit):
            return self._number(from_dyadic(arena, Dyadic(expr.value)))
        if isinstance(expr, DyadicLit):
            try:
                d = Dyadic.from_ratio(expr.num, expr.den)
            except ValueError as e:
                raise EvaluationError(str(e)) from e
            return self._number(from_dyadic(arena, d))
        if isinstance(expr, SignLit):
            return self._number(decode(arena, SignSeq.parse(expr.signs)))
        if isinstance(expr, Cut):
            left = [self.number(e) for e in expr.left]
            right = [self.number(e) for e in expr.right]
            return self._number(arena.make(left, right))
        if isinstance(expr, Neg):
            return self._number(neg(arena, self.number(expr.operand)))
        if isinstance(expr, BinOp):
            x, y = self.number(expr.left), self.number(expr.right)
            op = {"+": add, "-": sub, "*": mul}[expr.op]
            return self._number(op(arena, x, y))
        if isinstance(expr, Compare):
            x, y = self.number(expr.left), self.number(expr.right)
            relation = {"<": arena.lt, "<=": arena.leq, "==": arena.eq, "><": arena.apart}[expr.op]
            return Result(ResultKind.BOOLEAN, relation(x, y))
        if isinstance(expr, Call):
            return self._call(expr)
        raise EvaluationError(f"Cannot evaluate {expr!r}")

    def number(self, expr: Expr) -> NodeId:
        """Evaluate expr and require a number."""
        result = self.evaluate(expr)
        if result.kind is not ResultKind.NUMBER:
            raise EvaluationError(f"Expected a number, got a {result.kind.value}")
        return result.value

    def _number(self, x: NodeId) -> Result:
        return Result(ResultKind.NUMBER, x)

    def _call(self, expr: Call) -> Result:
        arena = self.arena
        x = self.number(expr.arg)
        if expr.name == "value":
            return Result(ResultKind.DYADIC, value(arena, x))
        if expr.name == "sign":
            return Result(ResultKind.SIGNS, encode(arena, x))
        if expr.name == "birthday":
            return Result(ResultKind.INTEGER, arena.birthday(x))
        if expr.name == "canon":
            return self._number(canonicalize(arena, x))
        raise EvaluationError(f"Unknown function: {expr.name}")

    def render(self, result: Result) -> str:
        """One-line text form of a result."""
        if result.kind is ResultKind.NUMBER:
            return render_canonical(self.arena, result.value)
        if result.kind is ResultKind.BOOLEAN:
            return "true" if result.value else "false"
        return str(result.value)

    def describe(self, source: str, result: Result) -> Dict[str, Any]:
        """JSON document for ``eval --json``."""
        if result.kind is ResultKind.NUMBER:
            x = canonicalize(self.arena, result.value)
            return {
                "expr": source,
                "canonical": render_canonical(self.arena, x),
                "value": str(value(self.arena, x)),
                "birthday": self.arena.birthday(x),
                "signs": str(encode(self.arena, x)),
            }
        rendered: Any = result.value if result.kind in (ResultKind.BOOLEAN, ResultKind.INTEGER) else str(result.value)
        return {"expr": source, "kind": result.kind.value, "result": rendered}

    def details(self, result: Result) -> List[str]:
        """Text lines for a number: canonical cut, value, birthday and signs."""
        if result.kind is not ResultKind.NUMBER:
            return [self.render(result)]
        doc = self.describe("", result)
        return [
            f"canonical: {doc['canonical']}",
            f"value: {doc['value']}",
            f"birthday: {doc['birthday']}",
            f"signs: {doc['signs']}",
        ]
