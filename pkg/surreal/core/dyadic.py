"""
Dyadic-rational oracle.

Every finitely-born surreal number has a value ``num / 2**exp``. This module
evaluates cuts numerically with the simplicity rule, builds the canonical
(earliest-born) cut for a dyadic, and does exact dyadic arithmetic.

The oracle never calls the arena's order relations when computing values:
disagreement between ``value`` and ``Arena.lt`` exposes a bug on one side.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterator, List, Optional, Tuple

from surreal.core.arena import Arena, NodeId
from surreal.core.errors import EmptyInterval

logger = logging.getLogger(__name__)

_LITERAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


@total_ordering
@dataclass(frozen=True)
class Dyadic:
    """Exact ``num / 2**exp`` kept in lowest terms (exp == 0 or num odd)."""
    num: int
    exp: int = 0

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError(f"Dyadic exponent must be nonnegative, got {self.exp}")
        num, exp = self.num, self.exp
        if num == 0:
            exp = 0
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """
        Parse ``"p"`` or ``"p/q"`` with q a power of two.

        Raises:
            ValueError: If the text is malformed or q is not a power of two
        """
        match = _LITERAL.match(text)
        if not match:
            raise ValueError(f"Not a dyadic literal: {text!r}")
        num = int(match.group(1))
        if match.group(2) is None:
            return cls(num)
        return cls.from_ratio(num, int(match.group(2)))

    @classmethod
    def from_ratio(cls, num: int, den: int) -> "Dyadic":
        """Build ``num/den``; den must be a positive power of two."""
        if den <= 0 or den & (den - 1):
            raise ValueError(
                f"{num}/{den} is not a dyadic rational: the denominator must be a power of two "
                f"(only dyadic values are finitely born)"
            )
        return cls(num, den.bit_length() - 1)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Dyadic":
        return cls.from_ratio(value.numerator, value.denominator)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    @property
    def denominator(self) -> int:
        return 1 << self.exp

    def is_integer(self) -> bool:
        return self.exp == 0

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{self.denominator}"

    def __repr__(self) -> str:
        return f"Dyadic({self})"

    def __add__(self, other: "Dyadic") -> "Dyadic":
        return dy_add(self, other)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        return dy_sub(self, other)

    def __mul__(self, other: "Dyadic") -> "Dyadic":
        return dy_mul(self, other)

    def __neg__(self) -> "Dyadic":
        return dy_neg(self)

    def __lt__(self, other: "Dyadic") -> bool:
        if not isinstance(other, Dyadic):
            return NotImplemented
        return dy_cmp(self, other) < 0


ZERO = Dyadic(0)
ONE = Dyadic(1)


def _align(a: Dyadic, b: Dyadic) -> Tuple[int, int, int]:
    exp = max(a.exp, b.exp)
    return a.num << (exp - a.exp), b.num << (exp - b.exp), exp


def dy_add(a: Dyadic, b: Dyadic) -> Dyadic:
    x, y, exp = _align(a, b)
    return Dyadic(x + y, exp)


def dy_neg(a: Dyadic) -> Dyadic:
    return Dyadic(-a.num, a.exp)


def dy_sub(a: Dyadic, b: Dyadic) -> Dyadic:
    return dy_add(a, dy_neg(b))


def dy_mul(a: Dyadic, b: Dyadic) -> Dyadic:
    return Dyadic(a.num * b.num, a.exp + b.exp)


def dy_cmp(a: Dyadic, b: Dyadic) -> int:
    """-1, 0 or 1 as a is below, equal to or above b."""
    x, y, _ = _align(a, b)
    return (x > y) - (x < y)


def dy_floor(a: Dyadic) -> int:
    """Greatest integer not above a."""
    return a.num >> a.exp


def dy_ceil(a: Dyadic) -> int:
    """Least integer not below a."""
    return -dy_floor(dy_neg(a))


def simplest_between(lower: Optional[Dyadic], upper: Optional[Dyadic]) -> Dyadic:
    """
    The earliest-born dyadic strictly between two optional bounds.

    An integer is preferred when one fits (the one closest to 0); otherwise
    the unique dyadic with the smallest denominator in the interval.

    Raises:
        EmptyInterval: If both bounds are given and lower >= upper
    """
    if lower is not None and upper is not None and not lower < upper:
        raise EmptyInterval(lower, upper)

    if (lower is None or lower < ZERO) and (upper is None or ZERO < upper):
        return ZERO
    if upper is None:
        return Dyadic(dy_floor(lower) + 1)
    if lower is None:
        return Dyadic(dy_ceil(upper) - 1)

    # Interval lies entirely on one side of 0
    if ZERO <= lower:
        candidate = Dyadic(dy_floor(lower) + 1)
        if candidate < upper:
            return candidate
    else:
        candidate = Dyadic(dy_ceil(upper) - 1)
        if lower < candidate:
            return candidate

    exp = 1
    while True:
        num = (lower.num << exp >> lower.exp) + 1
        candidate = Dyadic(num, exp)
        if candidate < upper:
            return candidate
        exp += 1


def descend(target: Dyadic) -> Iterator[Tuple[Dyadic, Optional[Dyadic], Optional[Dyadic]]]:
    """
    Walk the number tree from 0 towards target.

    Yields ``(current, lower, upper)`` for every node on the branch, where
    lower/upper are the nearest ancestors to the left and right. The last
    item has ``current == target``.
    """
    lower: Optional[Dyadic] = None
    upper: Optional[Dyadic] = None
    current = ZERO
    while True:
        yield current, lower, upper
        if current == target:
            return
        if current < target:
            lower = current
        else:
            upper = current
        current = simplest_between(lower, upper)


def tree_path(target: Dyadic) -> List[Dyadic]:
    """Values on the branch from 0 to target, both included."""
    return [current for current, _, _ in descend(target)]


def birthday_of(target: Dyadic) -> int:
    """Day on which target is born."""
    return len(tree_path(target)) - 1


def value(arena: Arena, x: NodeId) -> Dyadic:
    """
    Numeric value of a cut: the simplest dyadic between its largest left
    option value and its smallest right option value.
    """
    memo = arena.memo("value")
    cached = memo.get(x)
    if cached is not None:
        return cached
    node = arena.node(x)
    lower = max((value(arena, l) for l in node.left), default=None)
    upper = min((value(arena, r) for r in node.right), default=None)
    result = simplest_between(lower, upper)
    memo[x] = result
    return result


def from_dyadic(arena: Arena, d: Dyadic) -> NodeId:
    """
    Canonical (earliest-born) node with value d.

    Integers n > 0 are ``{n-1|}``, n < 0 are ``{|n+1}``, 0 is ``{|}``; any other
    d is ``{a|b}`` with a, b its nearest tree ancestors on either side.
    """
    memo = arena.memo("from_dyadic")
    cached = memo.get(d)
    if cached is not None:
        return cached
    *_, (_, lower, upper) = descend(d)
    left = [from_dyadic(arena, lower)] if lower is not None else []
    right = [from_dyadic(arena, upper)] if upper is not None else []
    result = arena.make(left, right)
    memo[d] = result
    # The canonical node evaluates to d by construction
    arena.memo("value").setdefault(result, d)
    return result
