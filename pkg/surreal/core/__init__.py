"""
surreal Core Module.

This module contains the number representation and everything computed
directly on it.

Components:
    arena: Interned cuts with the order relations, equality and apartness
    dyadic: The dyadic-rational oracle (value, from_dyadic, exact arithmetic)
    arithmetic: Negation, addition, products and difference pairs
    config: YAML configuration with environment overrides
    errors: Exception hierarchy shared by every package

Representation:
    A number is a ``NodeId`` into an ``Arena``. Each stored ``SurrealNode``
    holds sorted, duplicate-free tuples of left and right option ids and a
    cached birthday. Structural identity is id identity; semantic equality
    is ``Arena.eq``.

Example:
    Building 1/2 by hand::

        from surreal.core.arena import Arena

        arena = Arena()
        one = arena.make([arena.zero], [])
        half = arena.make([arena.zero], [one])
        assert arena.lt(half, one)

Configuration:
    Arena settings in ``.surreal/config.yml``::

        arena:
          node_budget: 4194304
          recursion_limit: 20000
"""

__all__ = []
