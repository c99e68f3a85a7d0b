"""Tests for the interned cut arena and its order relations."""

import pytest

from surreal.core.arena import Arena, options_match
from surreal.core.config import SurrealConfig
from surreal.core.errors import CutViolation, ResourceLimit, UnknownNode


@pytest.fixture
def small(arena):
    """0, 1, -1, 1/2 and the redundant form {-1, 0|} of 1, built by hand."""
    zero = arena.zero
    one = arena.make([zero], [])
    minus_one = arena.make([], [zero])
    half = arena.make([zero], [one])
    one_b = arena.make([minus_one, zero], [])
    return arena, zero, one, minus_one, half, one_b


class TestConstruction:

    def test_new_arena_holds_zero(self, arena):
        assert len(arena) == 1
        assert arena.node(arena.zero).key == ((), ())
        assert arena.birthday(arena.zero) == 0

    def test_make_interns_structurally_equal_cuts(self, small):
        arena, zero, one, *_ = small
        assert arena.make([zero, zero], []) == one
        assert arena.make([], []) == zero

    def test_options_are_sorted(self, small):
        arena, zero, one, minus_one, half, one_b = small
        assert arena.make([zero, minus_one], []) == one_b
        assert arena.node(one_b).left == tuple(sorted((zero, minus_one)))

    def test_birthdays(self, small):
        arena, zero, one, minus_one, half, one_b = small
        assert arena.birthday(one) == 1
        assert arena.birthday(half) == 2
        assert arena.birthday(one_b) == 2

    def test_cut_violation(self, small):
        arena, zero, one, *_ = small
        with pytest.raises(CutViolation) as exc:
            arena.make([one], [zero])
        assert exc.value.left == one
        assert exc.value.right == zero
        with pytest.raises(CutViolation):
            arena.make([zero], [zero])

    def test_unknown_option(self, arena):
        with pytest.raises(UnknownNode):
            arena.make([42], [])
        with pytest.raises(UnknownNode):
            arena.node(-1)
        assert True not in arena

    def test_node_budget(self):
        arena = Arena(node_budget=2)
        one = arena.make([arena.zero], [])
        with pytest.raises(ResourceLimit) as exc:
            arena.make([one], [])
        assert exc.value.budget == 2
        # Existing cuts are still found
        assert arena.make([arena.zero], []) == one

    def test_budget_from_config(self):
        arena = Arena(SurrealConfig(node_budget=5))
        assert arena.node_budget == 5

    def test_memo_tables_are_per_name(self, arena):
        table = arena.memo("scratch")
        table["k"] = 1
        assert arena.memo("scratch") is table
        assert arena.memo("other") == {}
        assert arena.stats()["scratch"] == 1


class TestOrder:

    def test_leq_examples(self, small):
        arena, zero, one, minus_one, half, one_b = small
        assert arena.leq(zero, one)
        assert not arena.leq(one, zero)
        assert arena.leq(half, one)
        assert arena.leq(one, one)

    def test_lt_examples(self, small):
        arena, zero, one, minus_one, half, one_b = small
        assert arena.lt(zero, one)
        assert arena.lt(half, one)
        assert arena.lt(minus_one, half)
        assert not arena.lt(one, one)
        assert not arena.lt(one, half)

    def test_eq_is_coarser_than_identity(self, small):
        arena, zero, one, minus_one, half, one_b = small
        assert one != one_b
        assert arena.eq(one, one_b)
        assert not arena.eq(one, half)

    def test_apart(self, small):
        arena, zero, one, minus_one, half, one_b = small
        assert arena.apart(zero, one)
        assert arena.apart(one, zero)
        assert not arena.apart(one, one)
        assert not arena.apart(one, one_b)

    def test_comparisons_write_memo_tables(self, arena):
        one = arena.make([arena.zero], [])
        before = arena.stats()
        assert arena.lt(arena.zero, one)
        after = arena.stats()
        assert after["nodes"] == before["nodes"]
        assert after["lt"] > before["lt"]
        assert after["leq"] > before["leq"]

    def test_option_sandwich(self, small):
        arena, *nodes = small
        for x in nodes:
            node = arena.node(x)
            assert all(arena.lt(l, x) for l in node.left)
            assert all(arena.lt(x, r) for r in node.right)

    def test_options_match(self, small):
        arena, zero, one, minus_one, half, one_b = small
        two = arena.make([one], [])
        two_b = arena.make([one_b], [])
        assert two != two_b
        assert options_match(arena, two, two_b)
        assert arena.eq(two, two_b)
        assert not options_match(arena, one, one_b)
