"""
Day-by-day generator of the number tree.

Day 0 holds only 0. Every node born on day n-1 spawns a left and a right
child on day n: the canonical cuts obtained by inserting the parent as a new
right (resp. left) bound next to its existing bounds. Day n therefore holds
2**n numbers in increasing order, from -n to n.

``check_conditions`` re-verifies the structural conditions the tree must
satisfy (ancestor branches, bifurcation, weak-Archimedean bracketing,
regularity of integers, date of birth) using the arena relations and the
dyadic oracle, and reports violations as data.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from surreal.core.arena import Arena, NodeId
from surreal.core.dyadic import Dyadic, dy_floor, from_dyadic, tree_path, value
from surreal.core.errors import NotInTree, ResourceLimit, SameNode

logger = logging.getLogger(__name__)


class Side(Enum):
    """Which child of its parent a node is."""
    ROOT = "root"
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class TreeNode:
    """A canonical node placed in the tree."""
    id: NodeId
    parent: Optional[NodeId]
    side: Side
    birthday: int


@dataclass
class Tree:
    """Generated days; ``days[n]`` lists the day-n nodes in increasing order."""
    days: List[List[TreeNode]] = field(default_factory=list)
    index: Dict[NodeId, TreeNode] = field(default_factory=dict)

    @property
    def node_count(self) -> int:
        return len(self.index)

    @property
    def max_day(self) -> int:
        return len(self.days) - 1

    def nodes(self) -> List[TreeNode]:
        """All nodes, day by day."""
        return [node for day in self.days for node in day]

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def get(self, x: NodeId) -> TreeNode:
        if x not in self.index:
            raise NotInTree(x)
        return self.index[x]

    def values_on_day(self, arena: Arena, day: int) -> List[Dyadic]:
        return [value(arena, node.id) for node in self.days[day]]


def child(arena: Arena, x: NodeId, side: Side) -> NodeId:
    """
    Canonical left or right child of a canonical node.

    The left child of ``{a|b}`` is ``{a|x}``, the right child ``{x|b}``.
    """
    node = arena.node(x)
    if side is Side.LEFT:
        return arena.make(node.left, [x])
    if side is Side.RIGHT:
        return arena.make([x], node.right)
    raise ValueError(f"A child must be LEFT or RIGHT, not {side}")


def generate(arena: Arena, days: int, node_budget: Optional[int] = None) -> Tree:
    """
    Build every canonical node born on days 0..days.

    Args:
        arena: Arena to intern the nodes in
        days: Last day to generate (>= 0)
        node_budget: Maximum tree size (default: the arena's budget)

    Returns:
        Tree with ``days + 1`` levels

    Raises:
        ValueError: If days is negative
        ResourceLimit: If 2**(days+1) - 1 nodes exceed the budget
    """
    if days < 0:
        raise ValueError(f"days must be nonnegative, got {days}")
    budget = node_budget if node_budget is not None else arena.node_budget
    total = 2 ** (days + 1) - 1
    if total > budget:
        raise ResourceLimit(total, budget, "tree nodes")

    root = TreeNode(arena.zero, None, Side.ROOT, 0)
    tree = Tree(days=[[root]], index={root.id: root})
    for day in range(1, days + 1):
        level: List[TreeNode] = []
        for parent in tree.days[-1]:
            for side in (Side.LEFT, Side.RIGHT):
                node = TreeNode(child(arena, parent.id, side), parent.id, side, day)
                level.append(node)
                tree.index[node.id] = node
        tree.days.append(level)
        logger.debug("Generated day %d: %d nodes", day, len(level))

    logger.info("Generated tree through day %d: %d nodes", days, tree.node_count)
    return tree


def branch(tree: Tree, x: NodeId) -> List[NodeId]:
    """
    Parent chain from the root to x, both included.

    Raises:
        NotInTree: If x was not generated
    """
    chain = [tree.get(x)]
    while chain[-1].parent is not None:
        chain.append(tree.index[chain[-1].parent])
    return [node.id for node in reversed(chain)]


def bifurcation(tree: Tree, x: NodeId, y: NodeId) -> int:
    """
    Last day on which the branches to x and y agree.

    Raises:
        SameNode: If x and y are the same node
        NotInTree: If either node was not generated
    """
    if x == y:
        raise SameNode(x)
    bx = branch(tree, x)
    by = branch(tree, y)
    shared = 0
    for a, b in zip(bx, by):
        if a != b:
            break
        shared += 1
    return shared - 1


@dataclass
class ConditionReport:
    """Outcome of ``check_conditions``; violations are data, not exceptions."""
    days: int
    node_count: int
    census: List[int] = field(default_factory=list)
    violations: List[Dict[str, Any]] = field(default_factory=list)
    weak_archimedean: Dict[str, int] = field(default_factory=dict)
    regular: Dict[str, str] = field(default_factory=dict)
    limits: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violation(self, condition: str, node: str, detail: str) -> None:
        self.violations.append({"condition": condition, "node": node, "detail": detail})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "days": self.days,
            "node_count": self.node_count,
            "census": self.census,
            "violations": self.violations,
            "weak_archimedean": self.weak_archimedean,
            "regular": self.regular,
            "limits": self.limits,
        }


def check_conditions(arena: Arena, tree: Tree) -> ConditionReport:
    """
    Independently re-verify the tree's structural conditions.

    Checked for every node: an ancestor branch from 0 exists, each step
    respects the child side, and the branch matches the oracle's tree walk;
    the day equals the stored birthday and branch depth; some integer n
    has n <= x <= n+1; nonzero integers have n-1 or n+1 as parent (regular)
    while 0 is a limit; branches of every pair agree up to one day and
    differ after it. Also checks the day census
    (2**n increasing nodes from -n to n) and that each node lies between its
    parent and the parent's bound on the child's side.
    """
    report = ConditionReport(days=tree.max_day, node_count=tree.node_count)
    branches: Dict[NodeId, List[NodeId]] = {}

    for day, level in enumerate(tree.days):
        report.census.append(len(level))
        if len(level) != 2 ** day:
            report.violation("census", f"day {day}", f"{len(level)} nodes, expected {2 ** day}")
        for a, b in zip(level, level[1:]):
            if not arena.lt(a.id, b.id):
                report.violation("census", f"day {day}", f"{_label(arena, a.id)} !< {_label(arena, b.id)}")
        if level:
            low, high = value(arena, level[0].id), value(arena, level[-1].id)
            if low != Dyadic(-day) or high != Dyadic(day):
                report.violation("census", f"day {day}", f"extremes {low}, {high}, expected {-day}, {day}")

    for node in tree.nodes():
        label = _label(arena, node.id)
        chain = branch(tree, node.id)
        branches[node.id] = chain
        _check_ancestor(arena, tree, node, chain, report, label)
        _check_birthday(arena, node, chain, report, label)
        _check_oracle_branch(arena, node, chain, report, label)
        _check_weak_archimedean(arena, node, report, label)
        _check_limit_regular(arena, tree, node, report, label)

    _check_bifurcation(arena, tree, branches, report)
    logger.info("Checked tree conditions: %d nodes, %d violations", report.node_count, len(report.violations))
    return report


def _label(arena: Arena, x: NodeId) -> str:
    return str(value(arena, x))


def _check_ancestor(arena, tree, node, chain, report, label) -> None:
    if chain[0] != arena.zero or chain[-1] != node.id:
        report.violation("ancestor", label, "branch does not run from 0 to the node")
        return
    for parent_id, child_id in zip(chain, chain[1:]):
        step = tree.index[child_id]
        if step.side is Side.LEFT and not arena.lt(child_id, parent_id):
            report.violation("ancestor", label, f"left child {_label(arena, child_id)} not below parent")
        if step.side is Side.RIGHT and not arena.lt(parent_id, child_id):
            report.violation("ancestor", label, f"right child {_label(arena, child_id)} not above parent")
    if node.parent is not None:
        # The node sits between its parent and the parent's bound on its side
        parent = arena.node(node.parent)
        bounds = parent.left if node.side is Side.LEFT else parent.right
        for bound in bounds:
            low, high = (bound, node.parent) if node.side is Side.LEFT else (node.parent, bound)
            if not (arena.lt(low, node.id) and arena.lt(node.id, high)):
                report.violation("sandwich", label, f"not strictly between {_label(arena, low)} and {_label(arena, high)}")


def _check_birthday(arena, node, chain, report, label) -> None:
    depth = len(chain) - 1
    if not (node.birthday == depth == arena.birthday(node.id)):
        report.violation(
            "date_of_birth", label,
            f"day {node.birthday}, depth {depth}, stored birthday {arena.birthday(node.id)}",
        )


def _check_oracle_branch(arena, node, chain, report, label) -> None:
    walked = [value(arena, step) for step in chain]
    if walked != tree_path(value(arena, node.id)):
        report.violation("branch", label, "branch disagrees with the oracle tree walk")


def _check_weak_archimedean(arena, node, report, label) -> None:
    n = dy_floor(value(arena, node.id))
    below = from_dyadic(arena, Dyadic(n))
    above = from_dyadic(arena, Dyadic(n + 1))
    if arena.leq(below, node.id) and arena.leq(node.id, above):
        report.weak_archimedean[label] = n
    else:
        report.violation("weak_archimedean", label, f"not between {n} and {n + 1}")


def _check_limit_regular(arena, tree, node, report, label) -> None:
    v = value(arena, node.id)
    if not v.is_integer():
        return
    if node.id == arena.zero:
        report.limits.append(label)
        return
    parent = value(arena, node.parent)
    if parent in (Dyadic(v.num - 1), Dyadic(v.num + 1)):
        report.regular[label] = str(parent)
    else:
        report.violation("limit_regular", label, f"integer with parent {parent}")


def _check_bifurcation(arena, tree, branches, report) -> None:
    ids = list(branches)
    for i, x in enumerate(ids):
        bx = branches[x]
        for y in ids[i + 1:]:
            by = branches[y]
            alpha = bifurcation(tree, x, y)
            agree = bx[:alpha + 1] == by[:alpha + 1]
            differ = all(a != b for a, b in zip(bx[alpha + 1:], by[alpha + 1:]))
            if alpha < 0 or not agree or not differ:
                report.violation(
                    "bifurcation", f"{_label(arena, x)},{_label(arena, y)}",
                    f"branches do not split cleanly after day {alpha}",
                )
