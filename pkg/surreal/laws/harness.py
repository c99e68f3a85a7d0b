"""
Law harness: exhaustive, deterministic evaluation of registered laws.

Tuples are enumerated with ``itertools.product`` over the corpus in its
increasing order, so a report depends only on (law, corpus, limit).
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from surreal.core.arena import Arena
from surreal.core.arithmetic import DiffPair
from surreal.core.config import SurrealConfig
from surreal.core.constants import DEFAULT_COUNTEREXAMPLE_LIMIT
from surreal.core.dyadic import value
from surreal.core.errors import SurrealError
from surreal.laws.corpus import Corpus, CorpusFilter, corpus
from surreal.laws.registry import Domain, LawContext, LawSpec, get_law, registered_laws

logger = logging.getLogger(__name__)


@dataclass
class LawReport:
    """Outcome of checking one law on one corpus."""
    law: str
    corpus: str
    tuples_checked: int = 0
    failures: int = 0
    counterexamples: List[List[str]] = field(default_factory=list)
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "law": self.law,
            "corpus": self.corpus,
            "tuples_checked": self.tuples_checked,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
        }


def _elements(law: LawSpec, data: Corpus) -> Sequence[Any]:
    if law.domain is Domain.DIFF_PAIRS:
        return [DiffPair(a, b) for a in data.nodes for b in data.nodes]
    return data.nodes


def _render(arena: Arena, element: Any) -> str:
    if isinstance(element, DiffPair):
        return f"({value(arena, element.a)}, {value(arena, element.b)})"
    return str(value(arena, element))


def check(
    law: LawSpec,
    data: Corpus,
    limit: Optional[int] = None,
    counterexample_limit: int = DEFAULT_COUNTEREXAMPLE_LIMIT,
) -> LawReport:
    """
    Evaluate a law on every tuple of the corpus.

    Args:
        law: Registered law
        data: Corpus to draw tuples from
        limit: Maximum number of tuples to evaluate (None: all)
        counterexample_limit: Maximum number of failing tuples to keep

    Returns:
        LawReport; a predicate raising a SurrealError counts as a failure
    """
    arena = data.arena
    ctx = LawContext(arena, data)
    elements = _elements(law, data)
    description = data.description
    if law.domain is Domain.DIFF_PAIRS:
        description = f"difference pairs over {description}"
    report = LawReport(law=law.name, corpus=description)

    total = len(elements) ** law.arity
    tuples: Iterable[Tuple[Any, ...]] = itertools.product(elements, repeat=law.arity)
    if limit is not None and total > limit:
        logger.warning("Law %s: checking %d of %d tuples", law.name, limit, total)
        tuples = itertools.islice(tuples, limit)
        report.truncated = True

    for args in tuples:
        report.tuples_checked += 1
        try:
            holds = law.predicate(ctx, *args)
        except SurrealError as e:
            logger.warning("Law %s raised on %s: %s", law.name, [_render(arena, a) for a in args], e)
            holds = False
        if not holds:
            report.failures += 1
            if len(report.counterexamples) < counterexample_limit:
                report.counterexamples.append([_render(arena, a) for a in args])

    level = logging.INFO if report.passed else logging.WARNING
    logger.log(
        level, "Law %s on %s: %d tuples, %d failures",
        law.name, description, report.tuples_checked, report.failures,
    )
    return report


def run_laws(
    arena: Arena,
    names: Optional[Iterable[str]] = None,
    max_day: Optional[int] = None,
    positive: bool = False,
    limit: Optional[int] = None,
    config: Optional[SurrealConfig] = None,
) -> List[LawReport]:
    """
    Check several laws, each on its designated corpus unless overridden.

    Args:
        arena: Arena to evaluate in
        names: Law names (None: every registered law)
        max_day: Override of each law's corpus day
        positive: Use the positive corpus for every law
        limit: Tuple cap per law (default: config.tuple_limit)
        config: Resolved configuration (default: the arena's)

    Raises:
        KeyError: If a name is not registered
        ResourceLimit: If a corpus exceeds the node budget
    """
    config = config or arena.config
    laws = [get_law(name) for name in names] if names else registered_laws()
    tuple_limit = limit if limit is not None else config.tuple_limit
    corpora: Dict[Tuple[int, CorpusFilter], Corpus] = {}

    reports = []
    for law in laws:
        day = max_day if max_day is not None else law.max_day
        corpus_filter = CorpusFilter.POSITIVE if positive else law.filter
        key = (day, corpus_filter)
        if key not in corpora:
            corpora[key] = corpus(arena, day, corpus_filter)
        reports.append(check(law, corpora[key], tuple_limit, config.counterexample_limit))

    logger.debug("Arena after law run: %s", arena.stats())
    return reports
