"""Shared fixtures for the surreal test suite."""

from typing import Iterable, List

import pytest

from surreal.core.arena import Arena, NodeId
from surreal.core.dyadic import Dyadic, from_dyadic, value


@pytest.fixture
def arena():
    """A fresh arena holding only 0."""
    return Arena()


def num(arena: Arena, text: str) -> NodeId:
    """Canonical node for a literal such as ``"3/4"`` or ``"-2"``."""
    return from_dyadic(arena, Dyadic.parse(text))


def values(arena: Arena, nodes: Iterable[NodeId]) -> List[str]:
    return [str(value(arena, x)) for x in nodes]
