"""Test corpora: all canonical numbers up to a birthday, optionally filtered by sign."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple

from surreal.core.arena import Arena, NodeId
from surreal.core.dyadic import value
from surreal.tree.generator import generate

logger = logging.getLogger(__name__)


class CorpusFilter(Enum):
    ALL = "all"
    POSITIVE = "positive"
    NONNEGATIVE = "nonnegative"


@dataclass(frozen=True)
class Corpus:
    """Canonical nodes of birthday <= max_day passing the filter, in increasing order."""
    arena: Arena = field(compare=False, repr=False)
    nodes: Tuple[NodeId, ...]
    max_day: int
    filter: CorpusFilter = CorpusFilter.ALL

    @property
    def description(self) -> str:
        kind = "" if self.filter is CorpusFilter.ALL else f"{self.filter.value}, "
        return f"canonical, {kind}birthday <= {self.max_day}"

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)


def corpus(arena: Arena, max_day: int, filter: CorpusFilter = CorpusFilter.ALL) -> Corpus:
    """
    Build a corpus from the generated tree.

    Raises:
        ResourceLimit: If the tree through max_day exceeds the node budget
    """
    tree = generate(arena, max_day)
    zero = arena.zero
    nodes = []
    for node in tree.nodes():
        x = node.id
        if filter is CorpusFilter.POSITIVE and not arena.lt(zero, x):
            continue
        if filter is CorpusFilter.NONNEGATIVE and not arena.leq(zero, x):
            continue
        nodes.append(x)
    nodes.sort(key=lambda x: value(arena, x))
    logger.debug("Corpus day<=%d %s: %d nodes", max_day, filter.value, len(nodes))
    return Corpus(arena, tuple(nodes), max_day, filter)
