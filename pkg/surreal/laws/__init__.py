"""
surreal Laws Module.

Exhaustive checking of algebraic and order laws over small corpora of
canonical numbers.

Components:
    corpus: Corpora of canonical nodes up to a birthday, optionally filtered
    registry: The ``@law`` decorator and every registered law
    harness: ``check`` and ``run_laws`` producing ``LawReport`` values
    report_store: Locked JSON/JSONL persistence of reports

Example:
    Checking commutativity of addition on day 3::

        from surreal.core.arena import Arena
        from surreal.laws.corpus import corpus
        from surreal.laws.harness import check
        from surreal.laws.registry import get_law

        arena = Arena()
        report = check(get_law("ADD_COMM"), corpus(arena, 3))
        assert report.failures == 0

Configuration:
    Harness settings in ``.surreal/config.yml``::

        laws:
          counterexample_limit: 10
          tuple_limit: 2000000
"""

__all__ = []
