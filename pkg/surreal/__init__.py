"""
surreal - exact arithmetic on finitely-born surreal numbers.

Every surreal number here is a cut ``{L | R}`` of earlier numbers, interned
in an arena so that structurally equal cuts share one id. On top of that
representation the package provides the order relations, addition,
negation, a multiplication on positive numbers extended to all numbers
through difference pairs, sign expansions, the day-by-day number tree, and
a harness that checks algebraic and order laws exhaustively against an
independent dyadic-rational oracle.

Modules:
    core: Arena, order relations, dyadic oracle and arithmetic
    tree: Sign expansions and the day-by-day tree generator
    laws: Corpus construction, the law registry and the checking harness
    cli: Expression parser, evaluator, command runner and REPL

Example:
    Basic usage::

        from surreal.core.arena import Arena
        from surreal.core.arithmetic import add, mul
        from surreal.core.dyadic import Dyadic, from_dyadic, value

        arena = Arena()
        half = from_dyadic(arena, Dyadic(1, 1))
        print(value(arena, mul(arena, half, half)))   # 1/4

See Also:
    - README.md for the project overview
    - SPEC_FULL.md for the requirements
    - .surreal/config.yml for configuration options
"""

__version__ = "1.0.0"
__author__ = "surreal maintainers"
__all__ = ["__version__"]
