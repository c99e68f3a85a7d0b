"""
Sign expansions.

A number's sign expansion records the turns on its tree branch: ``+`` for
each step to a right child, ``-`` for each step to a left child. Sequences
are ordered lexicographically with a missing entry ranked strictly between
``-`` and ``+``; under that order, encoding is an order isomorphism.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from surreal.core.arena import Arena, NodeId
from surreal.core.arithmetic import canonicalize
from surreal.tree.generator import Side, child

logger = logging.getLogger(__name__)


class Sign(Enum):
    MINUS = "-"
    PLUS = "+"

    @property
    def rank(self) -> int:
        return -1 if self is Sign.MINUS else 1


_ABSENT_RANK = 0


@dataclass(frozen=True)
class SignSeq:
    """Finite sequence over {-, +}; its length is the encoded number's birthday."""
    signs: Tuple[Sign, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "SignSeq":
        """
        Parse a string over ``+`` and ``-``; the empty string encodes 0.

        Raises:
            ValueError: If text contains any other character
        """
        try:
            return cls(tuple(Sign(ch) for ch in text))
        except ValueError as e:
            raise ValueError(f"Sign expansion may only contain '+' and '-': {text!r}") from e

    def __len__(self) -> int:
        return len(self.signs)

    def __str__(self) -> str:
        return "".join(s.value for s in self.signs)

    def __lt__(self, other: "SignSeq") -> bool:
        if not isinstance(other, SignSeq):
            return NotImplemented
        return seq_lt(self, other)


def _rank(seq: SignSeq, i: int) -> int:
    return seq.signs[i].rank if i < len(seq.signs) else _ABSENT_RANK


def seq_lt(s: SignSeq, t: SignSeq) -> bool:
    """Lexicographic order at the first differing index; absent sits between - and +."""
    for i in range(max(len(s), len(t))):
        u, v = _rank(s, i), _rank(t, i)
        if u != v:
            return u < v
    return False


def encode(arena: Arena, x: NodeId) -> SignSeq:
    """Sign expansion of x, read off the branch from 0 to canonicalize(x)."""
    target = canonicalize(arena, x)
    memo = arena.memo("encode")
    cached = memo.get(target)
    if cached is not None:
        return cached
    signs = []
    current = arena.zero
    for _ in range(arena.birthday(target)):
        if current == target:
            break
        if arena.lt(current, target):
            signs.append(Sign.PLUS)
            current = child(arena, current, Side.RIGHT)
        else:
            signs.append(Sign.MINUS)
            current = child(arena, current, Side.LEFT)
    if current != target:
        raise RuntimeError(f"Tree walk did not reach canonical node #{target}")
    result = SignSeq(tuple(signs))
    memo[target] = result
    return result


def decode(arena: Arena, seq: SignSeq) -> NodeId:
    """Canonical node reached from 0 by following seq (+ right, - left)."""
    current = arena.zero
    for sign in seq.signs:
        current = child(arena, current, Side.RIGHT if sign is Sign.PLUS else Side.LEFT)
    return current
