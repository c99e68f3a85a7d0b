"""Tests for corpora, the law registry and the harness."""

import pytest

from surreal.core.arena import Arena
from surreal.core.errors import NegativeOperand
from surreal.laws.corpus import CorpusFilter, corpus
from surreal.laws.harness import LawReport, check, run_laws
from surreal.laws.registry import Domain, LawContext, LawSpec, get_law, law, registered_laws
from tests.conftest import num, values


@pytest.fixture(scope="module")
def shared_arena():
    """One arena for the whole module so memo tables are reused across laws."""
    return Arena()


class TestCorpus:

    def test_examples(self, arena):
        assert values(arena, corpus(arena, 1)) == ["-1", "0", "1"]
        assert values(arena, corpus(arena, 2, CorpusFilter.POSITIVE)) == ["1/2", "1", "2"]
        assert len(corpus(arena, 0, CorpusFilter.POSITIVE)) == 0
        assert values(arena, corpus(arena, 1, CorpusFilter.NONNEGATIVE)) == ["0", "1"]

    def test_sizes(self, arena):
        assert len(corpus(arena, 3)) == 15
        assert len(corpus(arena, 4)) == 31
        assert len(corpus(arena, 3, CorpusFilter.POSITIVE)) == 7
        assert len(corpus(arena, 6)) == 127

    def test_description(self, arena):
        assert corpus(arena, 4).description == "canonical, birthday <= 4"
        assert corpus(arena, 2, CorpusFilter.POSITIVE).description == "canonical, positive, birthday <= 2"


class TestRegistry:

    def test_names_are_unique_and_known(self):
        names = [entry.name for entry in registered_laws()]
        assert len(names) == len(set(names))
        for name in ("ADD_COMM", "COTRANS_LT", "DIST_POS", "MUL_ASSOC", "SIGN_ORDER", "APART_COTRANSITIVE"):
            assert get_law(name).name == name

    def test_unknown_law(self):
        with pytest.raises(KeyError, match="NO_SUCH_LAW"):
            get_law("NO_SUCH_LAW")

    def test_duplicate_registration(self):
        with pytest.raises(ValueError, match="registered twice"):
            law("ADD_COMM", 2, "again")(lambda ctx, x, y: True)

    def test_arity_bounds(self):
        with pytest.raises(ValueError):
            LawSpec("BAD", 4, lambda ctx, *xs: True, "too many")

    def test_ordered_group_laws_run_on_day_four(self):
        names = ["COTRANS_LT", "SUM_MONOTONE", "CROSS_SUM"] + [f"DERIVED_LEQ_{i}" for i in range(1, 7)]
        for name in names:
            entry = get_law(name)
            assert entry.max_day == 4
            assert entry.filter is CorpusFilter.ALL

    def test_diff_pair_laws_use_positive_corpora(self):
        for entry in registered_laws():
            if entry.domain is Domain.DIFF_PAIRS:
                assert entry.filter is CorpusFilter.POSITIVE

    def test_derived_leq_matches_leq(self, arena):
        data = corpus(arena, 3)
        ctx = LawContext(arena, data)
        for a in data:
            for b in data:
                assert ctx.derived_leq(a, b) == arena.leq(a, b)


class TestCheck:

    def test_add_comm(self, shared_arena):
        report = check(get_law("ADD_COMM"), corpus(shared_arena, 3))
        assert report.failures == 0
        assert report.tuples_checked == 225

    def test_cotransitivity(self, shared_arena):
        report = check(get_law("COTRANS_LT"), corpus(shared_arena, 4))
        assert report.failures == 0
        assert report.tuples_checked == 31 ** 3

    def test_distributivity_on_positives(self, shared_arena):
        report = check(get_law("DIST_POS"), corpus(shared_arena, 3, CorpusFilter.POSITIVE))
        assert report.passed
        assert report.tuples_checked == 343

    def test_counterexamples_are_capped(self, arena):
        never = LawSpec("NEVER", 1, lambda ctx, x: False, "never holds")
        report = check(never, corpus(arena, 2), counterexample_limit=3)
        assert report.failures == 7
        assert report.counterexamples == [["-2"], ["-1"], ["-1/2"]]

    def test_errors_count_as_failures(self, arena):
        def raises(ctx, x):
            raise NegativeOperand("test", x)

        report = check(LawSpec("RAISES", 1, raises, "raises"), corpus(arena, 1))
        assert report.failures == 3

    def test_limit_truncates(self, arena):
        report = check(get_law("ADD_ASSOC"), corpus(arena, 2), limit=50)
        assert report.tuples_checked == 50
        assert report.truncated

    def test_diff_pair_domain(self, arena):
        report = check(get_law("DIFF_MUL_COMM"), corpus(arena, 2, CorpusFilter.POSITIVE))
        assert report.failures == 0
        assert report.tuples_checked == 81
        assert report.corpus.startswith("difference pairs over")

    def test_report_dict(self, arena):
        report = LawReport("X", "canonical, birthday <= 1", 3, 1, [["0"]])
        assert report.to_dict() == {
            "law": "X",
            "corpus": "canonical, birthday <= 1",
            "tuples_checked": 3,
            "failures": 1,
            "counterexamples": [["0"]],
        }

    def test_reports_are_deterministic(self):
        first = check(get_law("LT_ASYMMETRIC"), corpus(Arena(), 3)).to_dict()
        second = check(get_law("LT_ASYMMETRIC"), corpus(Arena(), 3)).to_dict()
        assert first == second


class TestRunLaws:

    def test_selected_laws(self, arena):
        reports = run_laws(arena, names=["ADD_COMM", "NEG_INVOLUTION"], max_day=2)
        assert [r.law for r in reports] == ["ADD_COMM", "NEG_INVOLUTION"]
        assert all(r.passed for r in reports)
        assert reports[0].tuples_checked == 49

    def test_positive_override(self, arena):
        (report,) = run_laws(arena, names=["ADD_COMM"], max_day=2, positive=True)
        assert report.tuples_checked == 9
        assert "positive" in report.corpus

    def test_unknown_name(self, arena):
        with pytest.raises(KeyError):
            run_laws(arena, names=["NOPE"])


@pytest.mark.parametrize("entry", registered_laws(), ids=lambda entry: entry.name)
def test_every_law_holds_on_its_corpus(shared_arena, entry):
    report = check(entry, corpus(shared_arena, entry.max_day, entry.filter))
    assert report.failures == 0, report.counterexamples
    assert report.tuples_checked > 0


def test_laws_reach_the_arena(arena):
    half = num(arena, "1/2")
    ctx = LawContext(arena, corpus(arena, 1))
    assert get_law("MUL_POS_POSITIVE").predicate(ctx, half, half)
