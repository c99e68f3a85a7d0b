"""
Interned cut representation of finitely-born surreal numbers.

A surreal number is a cut ``{L | R}`` whose options are earlier numbers.
The ``Arena`` stores every cut once (hash-consing on the sorted option ids),
so an id is a structural identity and memo tables keyed by ids are sound.

The order relations are the mutually recursive pair

    x <= y  iff  every x^L < y  and  x < every y^R
    x <  y  iff  some x <= y^L  or  some x^R <= y

and equality is ``x <= y and y <= x``. Both relations are memoized per id
pair; recursion always descends option structure, so they terminate.

Concurrency:
    Interning is guarded by a lock and stored nodes are immutable. Comparisons
    and arithmetic populate the unsynchronized memo tables, so even queries
    write to the arena: use an arena from one thread at a time, or give each
    thread its own arena.
"""

import logging
import sys
import threading
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from surreal.core.config import SurrealConfig
from surreal.core.errors import CutViolation, ResourceLimit, UnknownNode

logger = logging.getLogger(__name__)

NodeId = int


@dataclass(frozen=True)
class SurrealNode:
    """A stored cut: sorted, duplicate-free option ids and the cached birthday."""
    left: Tuple[NodeId, ...]
    right: Tuple[NodeId, ...]
    birthday: int

    @property
    def key(self) -> Tuple[Tuple[NodeId, ...], Tuple[NodeId, ...]]:
        return self.left, self.right

    @property
    def options(self) -> Tuple[NodeId, ...]:
        return self.left + self.right


class Arena:
    """Append-only store of interned cuts with memoized order relations."""

    def __init__(self, config: Optional[SurrealConfig] = None, node_budget: Optional[int] = None):
        """
        Initialize an arena holding only the empty cut.

        Args:
            config: Resolved configuration (default: SurrealConfig())
            node_budget: Explicit budget overriding config.node_budget
        """
        self.config = config or SurrealConfig()
        self.node_budget = node_budget if node_budget is not None else self.config.node_budget

        # Deep cuts recurse once per option level in leq/lt/add
        if sys.getrecursionlimit() < self.config.recursion_limit:
            logger.debug("Raising recursion limit to %d", self.config.recursion_limit)
            sys.setrecursionlimit(self.config.recursion_limit)

        self._nodes: List[SurrealNode] = []
        self._intern: Dict[Tuple[Tuple[NodeId, ...], Tuple[NodeId, ...]], NodeId] = {}
        self._lock = threading.Lock()
        self._leq: Dict[Tuple[NodeId, NodeId], bool] = {}
        self._lt: Dict[Tuple[NodeId, NodeId], bool] = {}
        self._memos: Dict[str, dict] = {}

        self.zero = self._intern_node((), ())

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < len(self._nodes)

    def memo(self, name: str) -> dict:
        """Return the named memo table owned by this arena, creating it on first use."""
        table = self._memos.get(name)
        if table is None:
            table = self._memos.setdefault(name, {})
        return table

    def node(self, x: NodeId) -> SurrealNode:
        """
        Look up a stored cut.

        Raises:
            UnknownNode: If x is not a valid id in this arena
        """
        if x not in self:
            raise UnknownNode(x)
        return self._nodes[x]

    def _intern_node(self, left: Tuple[NodeId, ...], right: Tuple[NodeId, ...]) -> NodeId:
        key = (left, right)
        existing = self._intern.get(key)
        if existing is not None:
            return existing
        with self._lock:
            existing = self._intern.get(key)
            if existing is not None:
                return existing
            if len(self._nodes) >= self.node_budget:
                raise ResourceLimit(len(self._nodes) + 1, self.node_budget)
            options = left + right
            birthday = 1 + max(self._nodes[o].birthday for o in options) if options else 0
            node_id = len(self._nodes)
            self._nodes.append(SurrealNode(left, right, birthday))
            self._intern[key] = node_id
            return node_id

    def make(self, left: Iterable[NodeId], right: Iterable[NodeId]) -> NodeId:
        """
        Intern the cut ``{left | right}``.

        Duplicate ids are removed and both sides sorted before lookup, so
        structurally identical cuts always map to the same id.

        Args:
            left: Ids of the left options
            right: Ids of the right options

        Returns:
            Id of the (possibly pre-existing) node

        Raises:
            UnknownNode: If an option id is not stored in this arena
            CutViolation: If some left option is not less than some right option
            ResourceLimit: If interning would exceed the node budget
        """
        left_ids = tuple(sorted(set(left)))
        right_ids = tuple(sorted(set(right)))
        for option in left_ids + right_ids:
            if option not in self:
                raise UnknownNode(option)

        existing = self._intern.get((left_ids, right_ids))
        if existing is not None:
            return existing

        for l in left_ids:
            for r in right_ids:
                if not self.lt(l, r):
                    raise CutViolation(l, r)
        return self._intern_node(left_ids, right_ids)

    def leq(self, x: NodeId, y: NodeId) -> bool:
        """``x <= y``: every left option of x is below y and x is below every right option of y."""
        key = (x, y)
        cached = self._leq.get(key)
        if cached is not None:
            return cached
        if x == y:
            result = True
        else:
            xn = self.node(x)
            yn = self.node(y)
            result = True
            for xl in xn.left:
                if not self.lt(xl, y):
                    result = False
                    break
            if result:
                for yr in yn.right:
                    if not self.lt(x, yr):
                        result = False
                        break
        self._leq[key] = result
        return result

    def lt(self, x: NodeId, y: NodeId) -> bool:
        """``x < y``: x is at most some left option of y, or some right option of x is at most y."""
        key = (x, y)
        cached = self._lt.get(key)
        if cached is not None:
            return cached
        result = False
        if x != y:
            xn = self.node(x)
            yn = self.node(y)
            for yl in yn.left:
                if self.leq(x, yl):
                    result = True
                    break
            if not result:
                for xr in xn.right:
                    if self.leq(xr, y):
                        result = True
                        break
        self._lt[key] = result
        return result

    def eq(self, x: NodeId, y: NodeId) -> bool:
        """Semantic equality; coarser than id identity."""
        return x == y or (self.leq(x, y) and self.leq(y, x))

    def birthday(self, x: NodeId) -> int:
        """Birthday of the stored representative (not invariant under eq)."""
        return self.node(x).birthday

    def apart(self, x: NodeId, y: NodeId) -> bool:
        """Apartness: ``x < y or y < x``."""
        return self.lt(x, y) or self.lt(y, x)

    def stats(self) -> Dict[str, int]:
        """Sizes of the node store and memo tables, for debug logging."""
        sizes = {"nodes": len(self._nodes), "leq": len(self._leq), "lt": len(self._lt)}
        for name, table in self._memos.items():
            sizes[name] = len(table)
        return sizes


def options_match(arena: Arena, x: NodeId, y: NodeId) -> bool:
    """
    Option-wise equality criterion.

    True when every left option of x is eq to some left option of y and vice
    versa, and likewise for right options. When it holds, x and y are eq.
    """
    xn = arena.node(x)
    yn = arena.node(y)
    return (
        _covered(arena, xn.left, yn.left)
        and _covered(arena, yn.left, xn.left)
        and _covered(arena, xn.right, yn.right)
        and _covered(arena, yn.right, xn.right)
    )


def _covered(arena: Arena, these: Tuple[NodeId, ...], those: Tuple[NodeId, ...]) -> bool:
    return all(any(arena.eq(a, b) for b in those) for a in these)
