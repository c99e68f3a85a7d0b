"""
Arithmetic on interned cuts.

Negation and addition follow the recursive cut definitions

    -x    = { -x^R | -x^L }
    x + y = { x^L + y, x + y^L | x^R + y, x + y^R }

Multiplication is built in two stages:

* ``mul_pos`` multiplies nonnegative numbers with the cut

      { x^L y + (x - x^L) y^L,  x^R y - (x^R - x) y^R
      | x^L y + (x - x^L) y^R,  x^R y - (x^R - x) y^L }

  where a term is omitted whenever an option it needs does not exist.
  Operands and every intermediate product or difference are canonicalized,
  so each recursive call either keeps y and moves x to one of its options,
  or moves y to one of its options; the recursion therefore terminates.
* ``mul`` extends it to all numbers by writing each operand as a difference
  of two positive numbers (``to_diff``), multiplying the pairs with
  ``(a - b)(a' - b') = (aa' + bb') - (ab' + ba')`` and subtracting.

``mul_conway`` is the classical product, kept as an independent
cross-check for ``mul_pos``.
"""

import logging
from dataclasses import dataclass
from typing import List

from surreal.core.arena import Arena, NodeId
from surreal.core.dyadic import Dyadic, dy_floor, from_dyadic, value
from surreal.core.errors import NegativeOperand

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiffPair:
    """The number ``a - b`` written with two positive nodes."""
    a: NodeId
    b: NodeId


def neg(arena: Arena, x: NodeId) -> NodeId:
    """Negation ``{-x^R | -x^L}``."""
    memo = arena.memo("neg")
    cached = memo.get(x)
    if cached is not None:
        return cached
    node = arena.node(x)
    result = arena.make(
        [neg(arena, r) for r in node.right],
        [neg(arena, l) for l in node.left],
    )
    memo[x] = result
    memo.setdefault(result, x)
    return result


def add(arena: Arena, x: NodeId, y: NodeId) -> NodeId:
    """Conway sum; the option sets are symmetric in x and y, so the memo key is unordered."""
    if x > y:
        x, y = y, x
    memo = arena.memo("add")
    key = (x, y)
    cached = memo.get(key)
    if cached is not None:
        return cached
    xn = arena.node(x)
    yn = arena.node(y)
    left = [add(arena, xl, y) for xl in xn.left] + [add(arena, x, yl) for yl in yn.left]
    right = [add(arena, xr, y) for xr in xn.right] + [add(arena, x, yr) for yr in yn.right]
    result = arena.make(left, right)
    memo[key] = result
    return result


def sub(arena: Arena, x: NodeId, y: NodeId) -> NodeId:
    """``x + (-y)``."""
    return add(arena, x, neg(arena, y))


def canonicalize(arena: Arena, x: NodeId) -> NodeId:
    """Earliest-born node eq to x."""
    return from_dyadic(arena, value(arena, x))


def mul_pos(arena: Arena, x: NodeId, y: NodeId) -> NodeId:
    """
    Product of two nonnegative numbers.

    Args:
        arena: Arena owning both ids
        x: Nonnegative factor
        y: Nonnegative factor

    Returns:
        The product cut (options canonicalized); zero if either factor is eq to 0

    Raises:
        NegativeOperand: If x or y is below 0
    """
    zero = arena.zero
    for operand in (x, y):
        if not arena.leq(zero, operand):
            raise NegativeOperand("mul_pos", operand)
    if arena.eq(x, zero) or arena.eq(y, zero):
        return zero

    cx = canonicalize(arena, x)
    cy = canonicalize(arena, y)
    memo = arena.memo("mul_pos")
    key = (cx, cy)
    cached = memo.get(key)
    if cached is not None:
        return cached

    xn = arena.node(cx)
    yn = arena.node(cy)
    left: List[NodeId] = []
    right: List[NodeId] = []

    for xl in xn.left:
        base = _pos_product(arena, xl, cy)
        gap = canonicalize(arena, sub(arena, cx, xl))
        for yl in yn.left:
            left.append(canonicalize(arena, add(arena, base, _pos_product(arena, gap, yl))))
        for yr in yn.right:
            right.append(canonicalize(arena, add(arena, base, _pos_product(arena, gap, yr))))

    for xr in xn.right:
        base = _pos_product(arena, xr, cy)
        gap = canonicalize(arena, sub(arena, xr, cx))
        for yr in yn.right:
            left.append(canonicalize(arena, sub(arena, base, _pos_product(arena, gap, yr))))
        for yl in yn.left:
            right.append(canonicalize(arena, sub(arena, base, _pos_product(arena, gap, yl))))

    result = arena.make(left, right)
    memo[key] = result
    logger.debug("mul_pos #%d * #%d -> #%d (%d|%d options)", cx, cy, result, len(left), len(right))
    return result


def _pos_product(arena: Arena, x: NodeId, y: NodeId) -> NodeId:
    return canonicalize(arena, mul_pos(arena, x, y))


def mul_conway(arena: Arena, x: NodeId, y: NodeId) -> NodeId:
    """
    Classical product over canonical operands:

        { x^L y + x y^L - x^L y^L,  x^R y + x y^R - x^R y^R
        | x^L y + x y^R - x^L y^R,  x^R y + x y^L - x^R y^L }
    """
    cx = canonicalize(arena, x)
    cy = canonicalize(arena, y)
    memo = arena.memo("mul_conway")
    key = (cx, cy)
    cached = memo.get(key)
    if cached is not None:
        return cached

    xn = arena.node(cx)
    yn = arena.node(cy)

    def term(xo: NodeId, yo: NodeId) -> NodeId:
        total = add(arena, _conway_product(arena, xo, cy), _conway_product(arena, cx, yo))
        return canonicalize(arena, sub(arena, total, _conway_product(arena, xo, yo)))

    left = [term(xl, yl) for xl in xn.left for yl in yn.left]
    left += [term(xr, yr) for xr in xn.right for yr in yn.right]
    right = [term(xl, yr) for xl in xn.left for yr in yn.right]
    right += [term(xr, yl) for xr in xn.right for yl in yn.left]

    result = arena.make(left, right)
    memo[key] = result
    return result


def _conway_product(arena: Arena, x: NodeId, y: NodeId) -> NodeId:
    return canonicalize(arena, mul_conway(arena, x, y))


def int_bound(arena: Arena, x: NodeId) -> NodeId:
    """Canonical positive integer ``max(1, floor(x) + 2)``, which exceeds x."""
    n = max(1, dy_floor(value(arena, x)) + 2)
    return from_dyadic(arena, Dyadic(n))


def _require_pair(arena: Arena, p: DiffPair, operation: str) -> None:
    for component in (p.a, p.b):
        if not arena.lt(arena.zero, component):
            raise NegativeOperand(operation, component)


def to_diff(arena: Arena, x: NodeId) -> DiffPair:
    """Write x as ``n - (n - x)`` with n = int_bound(x)."""
    n = int_bound(arena, x)
    return DiffPair(n, canonicalize(arena, sub(arena, n, x)))


def from_diff(arena: Arena, p: DiffPair) -> NodeId:
    """``p.a - p.b``."""
    _require_pair(arena, p, "from_diff")
    return sub(arena, p.a, p.b)


def mul_diff(arena: Arena, p: DiffPair, q: DiffPair) -> DiffPair:
    """``(a - b)(a' - b') = (aa' + bb') - (ab' + ba')``, components canonical."""
    _require_pair(arena, p, "mul_diff")
    _require_pair(arena, q, "mul_diff")
    plus = add(arena, _pos_product(arena, p.a, q.a), _pos_product(arena, p.b, q.b))
    minus = add(arena, _pos_product(arena, p.a, q.b), _pos_product(arena, p.b, q.a))
    return DiffPair(canonicalize(arena, plus), canonicalize(arena, minus))


def add_diff(arena: Arena, p: DiffPair, q: DiffPair) -> DiffPair:
    """``(a - b) + (a' - b') = (a + a') - (b + b')``, components canonical."""
    _require_pair(arena, p, "add_diff")
    _require_pair(arena, q, "add_diff")
    return DiffPair(
        canonicalize(arena, add(arena, p.a, q.a)),
        canonicalize(arena, add(arena, p.b, q.b)),
    )


def neg_diff(arena: Arena, p: DiffPair) -> DiffPair:
    """``-(a - b) = b - a``."""
    _require_pair(arena, p, "neg_diff")
    return DiffPair(p.b, p.a)


def mul(arena: Arena, x: NodeId, y: NodeId) -> NodeId:
    """Product on all numbers through difference pairs; the result is canonical."""
    memo = arena.memo("mul")
    key = (x, y)
    cached = memo.get(key)
    if cached is not None:
        return cached
    product = mul_diff(arena, to_diff(arena, x), to_diff(arena, y))
    result = canonicalize(arena, from_diff(arena, product))
    memo[key] = result
    return result


