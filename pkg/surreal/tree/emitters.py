"""
Tree emitters: graphviz DOT and JSON.

DOT output puts each day on its own rank with parent edges (dashed to a
left child, solid to a right child). JSON output is one document with the
per-day arrays of ``{value, parent, sign}``, where ``sign`` is the node's
full sign expansion.

Render a DOT file with::

    dot -Tpng -O tree.gv
"""

from typing import Any, Dict, List

from surreal.core.arena import Arena
from surreal.core.dyadic import value
from surreal.tree.generator import Side, Tree
from surreal.tree.signexp import encode


def to_dot(arena: Arena, tree: Tree) -> str:
    lines: List[str] = ["digraph tree {", "\tgraph [rankdir=TB]"]
    for day, level in enumerate(tree.days):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for node in level:
            lines.append(f'\t\t"n{node.id}" [label="{value(arena, node.id)}"];')
        lines.append("\t}")
    for node in tree.nodes():
        if node.parent is None:
            continue
        style = "dashed" if node.side is Side.LEFT else "solid"
        lines.append(f'\t"n{node.parent}" -> "n{node.id}" [style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(arena: Arena, tree: Tree) -> Dict[str, Any]:
    days = []
    for level in tree.days:
        days.append([
            {
                "value": str(value(arena, node.id)),
                "parent": None if node.parent is None else str(value(arena, node.parent)),
                "sign": str(encode(arena, node.id)),
            }
            for node in level
        ])
    return {"days": days, "node_count": tree.node_count}
