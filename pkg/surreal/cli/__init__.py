"""
surreal CLI Module.

Components:
    parser: Tokenizer, recursive-descent parser and ``to_source``
    evaluator: Evaluation of parsed expressions and result rendering
    runner: argparse entry point with the eval, tree, laws and repl commands

Example:
    From the shell::

        python -m surreal eval "sign(3/4)"
        python -m surreal tree --days 2 --format json
"""

__all__ = []
