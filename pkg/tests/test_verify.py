import pytest

from mycielski.errors import DiameterNotTwoError
from mycielski.generators import (
    complete,
    cycle,
    enumerate_connected,
    erdos_renyi_connected,
    path,
    petersen,
    star,
)
from mycielski.graph import Graph
from mycielski.verify import (
    CLAIM_IDS,
    verify_corpus,
    verify_lemma3,
    verify_observation1,
    verify_observation2,
    verify_randic_bounds,
    verify_theorem_dd,
)


class TestSingleGraphChecks:
    def test_obs1_counts_vertices(self):
        out = verify_observation1(cycle(4))
        assert out.passed and out.checked == 9
        assert verify_observation1(petersen()).checked == 21
        assert verify_observation1(complete(2)).checked == 5

    @pytest.mark.parametrize("g", [path(5), path(6), complete(3)], ids=["P5", "P6", "K3"])
    def test_obs2(self, g):
        out = verify_observation2(g)
        assert out.passed
        assert out.checked == (2 * g.n + 1) ** 2

    @pytest.mark.parametrize("g", [star(4), cycle(4), cycle(5)], ids=["K1_4", "C4", "C5"])
    def test_lemma3(self, g):
        assert verify_lemma3(g).passed

    def test_lemma3_needs_diameter_two(self):
        with pytest.raises(DiameterNotTwoError):
            verify_lemma3(path(4))

    @pytest.mark.parametrize("g", [cycle(5), cycle(4)], ids=["C5", "C4"])
    def test_theorem_dd(self, g):
        assert verify_theorem_dd(g).passed

    def test_theorem_dd_strict_rejects_k2(self):
        with pytest.raises(DiameterNotTwoError):
            verify_theorem_dd(complete(2))

    def test_theorem_dd_relaxed_on_k2_matches(self):
        out = verify_theorem_dd(complete(2), relax_diameter=True)
        assert out.passed

    def test_theorem_dd_relaxed_records_divergence(self):
        out = verify_theorem_dd(path(5), relax_diameter=True)
        assert not out.passed
        failure = out.failures[0]
        assert failure.expected == 614  # brute force
        assert failure.actual == 604  # polynomial outside its hypothesis
        assert failure.edges == path(5).edges

    @pytest.mark.parametrize("g", [cycle(4), star(4), complete(2)], ids=["C4", "K1_4", "K2"])
    def test_randic_bounds(self, g):
        assert verify_randic_bounds(g).passed

    def test_randic_checked_counts_regular_equalities(self):
        assert verify_randic_bounds(cycle(4)).checked == 4
        assert verify_randic_bounds(star(4)).checked == 2


class TestCorpus:
    def test_thm_dd_exhaustive_n5(self):
        (out,) = verify_corpus(["thm_dd"], enumerate_connected(5))
        assert out.passed
        assert out.checked + out.skipped == 728

    def test_obs2_exhaustive_n4(self):
        (out,) = verify_corpus(["obs2"], enumerate_connected(4))
        assert out.passed
        assert out.skipped == 0
        assert out.checked == 38 * 81

    def test_randic_bounds_random_corpus(self):
        corpus = (erdos_renyi_connected(10, 0.3, seed) for seed in range(100))
        (out,) = verify_corpus(["randic_bounds"], corpus)
        assert out.passed
        assert out.checked == 200

    def test_equality_claim_skips_irregular(self):
        outs = verify_corpus(["randic_equality"], [cycle(5), star(3), petersen()])
        (out,) = outs
        assert out.passed
        assert out.skipped == 1

    def test_lemma3_skips_wrong_diameter(self):
        (out,) = verify_corpus(["lemma3"], [path(4), cycle(4), complete(3)])
        assert out.checked == 1  # only C4 has diameter exactly 2
        assert out.skipped == 2

    def test_claims_run_in_canonical_order(self):
        outs = verify_corpus(["thm_dd", "obs1"], [cycle(4)])
        assert [o.claim for o in outs] == ["obs1", "thm_dd"]

    def test_unknown_claim_rejected(self):
        with pytest.raises(ValueError):
            verify_corpus(["obs3"], [cycle(4)])

    def test_relaxed_failures_sorted_and_replayable(self):
        corpus = [path(6), path(5), cycle(7)]
        (out,) = verify_corpus(["thm_dd"], corpus, relax_diameter=True)
        assert out.checked == 3 and not out.passed
        sorted_edges = [f.edges for f in out.failures]
        assert sorted_edges == sorted(sorted_edges)
        for failure in out.failures:
            n = max(v for e in failure.edges for v in e) + 1
            replay = verify_theorem_dd(Graph(n, failure.edges), relax_diameter=True)
            assert replay.failures[0].expected == failure.expected
            assert replay.failures[0].actual == failure.actual

    def test_disconnected_graphs_are_skipped_not_fatal(self):
        isolated = Graph(4, [(0, 1), (1, 2)])  # vertex 3 isolated
        outs = verify_corpus(list(CLAIM_IDS), [isolated, cycle(4)])
        by_claim = {o.claim: o for o in outs}
        assert all(o.passed for o in outs)
        # obs1 needs no distances, so the disconnected graph still counts
        assert by_claim["obs1"].skipped == 0
        assert by_claim["obs2"].skipped == 1
        assert by_claim["lemma3"].skipped == 1
        assert by_claim["randic_bounds"].skipped == 1  # minimum degree 0

    def test_degree_only_claims_accept_disconnected_positive_degrees(self):
        # two disjoint edges: the bounds are degree-based and still apply
        two_edges = Graph(4, [(0, 1), (2, 3)])
        (out,) = verify_corpus(["randic_bounds"], [two_edges])
        assert out.passed and out.skipped == 0

    def test_outcome_serialization(self):
        (out,) = verify_corpus(["thm_dd"], [path(5)], relax_diameter=True)
        record = out.as_dict(include_timing=False)
        assert record["claim"] == "thm_dd"
        assert record["elapsed_ms"] == 0
        assert record["failures"][0]["edges"] == [[0, 1], [1, 2], [2, 3], [3, 4]]
        assert record["failures"][0]["expected"] == 614
        timed = out.as_dict(include_timing=True)
        assert timed["elapsed_ms"] > 0
