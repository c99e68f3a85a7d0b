"""
surreal Tree Module.

The number tree and the sign-expansion coding built on it.

Components:
    generator: Day-by-day tree generation, branches, bifurcation points and
        the structural condition checker
    signexp: Sign expansions, their order, encode and decode
    emitters: DOT and JSON renderings of a generated tree

Example:
    Generating three days and checking them::

        from surreal.core.arena import Arena
        from surreal.tree.generator import check_conditions, generate

        arena = Arena()
        tree = generate(arena, 3)
        assert tree.node_count == 15
        assert check_conditions(arena, tree).ok
"""

__all__ = []
