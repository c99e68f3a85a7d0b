"""Tests for the tree generator, condition checker and emitters."""

import pytest

from surreal.core.dyadic import value
from surreal.core.errors import NotInTree, ResourceLimit, SameNode
from surreal.tree.emitters import to_dot, to_json
from surreal.tree.generator import Side, bifurcation, branch, check_conditions, child, generate
from surreal.tree.signexp import Sign, encode
from tests.conftest import num, values


class TestGenerate:

    def test_day_two(self, arena):
        tree = generate(arena, 2)
        assert [str(v) for v in tree.values_on_day(arena, 2)] == ["-2", "-1/2", "1/2", "2"]
        assert tree.node_count == 7
        assert tree.max_day == 2

    def test_counts(self, arena):
        assert generate(arena, 0).node_count == 1
        assert generate(arena, 3).node_count == 15
        assert [len(day) for day in generate(arena, 6).days] == [1, 2, 4, 8, 16, 32, 64]

    def test_parents_and_sides(self, arena):
        tree = generate(arena, 3)
        node = tree.get(num(arena, "3/4"))
        assert node.parent == num(arena, "1/2")
        assert node.side is Side.RIGHT
        assert node.birthday == 3
        assert tree.get(arena.zero).side is Side.ROOT

    def test_child(self, arena):
        one = num(arena, "1")
        assert child(arena, one, Side.LEFT) == num(arena, "1/2")
        assert child(arena, one, Side.RIGHT) == num(arena, "2")
        with pytest.raises(ValueError):
            child(arena, one, Side.ROOT)

    def test_negative_days(self, arena):
        with pytest.raises(ValueError):
            generate(arena, -1)

    def test_budget(self, arena):
        with pytest.raises(ResourceLimit) as exc:
            generate(arena, 3, node_budget=10)
        assert exc.value.requested == 15


class TestBranches:

    def test_branch(self, arena):
        tree = generate(arena, 3)
        assert values(arena, branch(tree, num(arena, "3/4"))) == ["0", "1", "1/2", "3/4"]
        assert values(arena, branch(tree, num(arena, "-2"))) == ["0", "-1", "-2"]
        assert branch(tree, arena.zero) == [arena.zero]

    @pytest.mark.parametrize("x,y,day", [("-1", "1", 0), ("1/2", "3/4", 2), ("2", "1/2", 1), ("0", "3", 0)])
    def test_bifurcation(self, arena, x, y, day):
        tree = generate(arena, 3)
        assert bifurcation(tree, num(arena, x), num(arena, y)) == day
        assert bifurcation(tree, num(arena, y), num(arena, x)) == day

    def test_bifurcation_errors(self, arena):
        tree = generate(arena, 2)
        with pytest.raises(SameNode):
            bifurcation(tree, arena.zero, arena.zero)
        with pytest.raises(NotInTree):
            bifurcation(tree, arena.zero, num(arena, "3/4"))

    def test_signs_follow_branch_steps(self, arena):
        tree = generate(arena, 6)
        for node in tree.nodes():
            path = branch(tree, node.id)
            signs = encode(arena, node.id).signs
            assert len(signs) == len(path) - 1
            for k, sign in enumerate(signs):
                assert (sign is Sign.PLUS) == arena.lt(path[k], path[k + 1])

    def test_denominators_bounded_by_day(self, arena):
        tree = generate(arena, 6)
        for day in range(1, 7):
            assert all(v.exp <= day - 1 for v in tree.values_on_day(arena, day))
        assert all(value(arena, node.id).exp <= node.birthday for node in tree.nodes())


class TestConditions:

    def test_generated_tree_satisfies_conditions(self, arena):
        report = check_conditions(arena, generate(arena, 4))
        assert report.ok, report.violations
        assert report.census == [1, 2, 4, 8, 16]
        assert report.weak_archimedean["3/4"] == 0
        assert report.weak_archimedean["-1/2"] == -1
        assert report.regular["3"] == "2"
        assert report.regular["-1"] == "0"
        assert report.limits == ["0"]

    def test_six_days(self, arena):
        report = check_conditions(arena, generate(arena, 6))
        assert report.ok
        assert report.node_count == 127

    def test_report_dict(self, arena):
        doc = check_conditions(arena, generate(arena, 1)).to_dict()
        assert doc["days"] == 1
        assert doc["node_count"] == 3
        assert doc["violations"] == []

    def test_violation_is_reported(self, arena):
        tree = generate(arena, 2)
        # Corrupt the recorded birthday of one node
        node = tree.days[2][0]
        tree.days[2][0] = type(node)(node.id, node.parent, node.side, 5)
        tree.index[node.id] = tree.days[2][0]
        report = check_conditions(arena, tree)
        assert not report.ok
        assert report.violations[0]["condition"] == "date_of_birth"
        assert report.violations[0]["node"] == "-2"


class TestEmitters:

    def test_json(self, arena):
        doc = to_json(arena, generate(arena, 2))
        assert doc["node_count"] == 7
        assert [n["value"] for n in doc["days"][2]] == ["-2", "-1/2", "1/2", "2"]
        assert doc["days"][0] == [{"value": "0", "parent": None, "sign": ""}]
        assert doc["days"][2][1] == {"value": "-1/2", "parent": "-1", "sign": "-+"}

    def test_dot(self, arena):
        text = to_dot(arena, generate(arena, 1))
        assert text.startswith("digraph tree {")
        assert text.count("rank = same;") == 2
        assert "[style=dashed]" in text
        assert "[style=solid]" in text
        assert 'label="-1"' in text
