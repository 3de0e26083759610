import pytest
from mdlseg.seg import Position, SearchConfig, SearchMode, greedy_search, random_baseline, run_trials, brute_force, \
    is_admissible, verify, total_dl, boundary_score, ClusterRules
from mdlseg.seg.errors import ContractViolationError, LimitExceededError


def _replay(corpus, trace):
    segmentation = corpus.empty_segmentation()
    yield segmentation
    for step in trace.steps[1:]:
        segmentation = segmentation.with_points(step.points)
        yield segmentation


def test_search_modes():
    assert SearchMode("dist-phono").uses_phonotactics
    assert not SearchMode.DIST_FREE.is_random
    assert SearchMode.RAND_PHONO.is_random and SearchMode.RAND_PHONO.uses_phonotactics


@pytest.mark.parametrize("arguments, error", [
    ({"max_points_per_step": 3}, ValueError),
    ({"trials": 0}, ValueError),
    ({"threads": 0}, ValueError),
    ({"phonotactics": "sp"}, TypeError),
])
def test_search_config_validation(arguments, error):
    with pytest.raises(error):
        SearchConfig(**arguments)


def test_greedy_search_on_kitty(kitty):
    segmentation, report, trace = greedy_search(kitty)

    assert trace.steps[0].step == 0
    assert trace.steps[0].committed_dl == pytest.approx(total_dl(kitty, kitty.empty_segmentation()).total_bits)
    assert sum(len(step.points) for step in trace.steps) == 30
    assert all(1 <= len(step.points) <= 2 for step in trace.steps[1:])

    assert report.total_bits == pytest.approx(total_dl(kitty, segmentation).total_bits)
    assert report.total_bits <= trace.steps[0].committed_dl
    assert trace.best_segmentation == segmentation
    assert trace.steps[trace.best_step].committed_dl == pytest.approx(report.total_bits)
    assert min(trace.committed_dls) == pytest.approx(report.total_bits)


def test_greedy_trace_matches_from_scratch(kitty):
    _, _, trace = greedy_search(kitty)
    for step, segmentation in zip(trace.steps, _replay(kitty, trace)):
        assert step.committed_dl == pytest.approx(total_dl(kitty, segmentation).total_bits, rel=1e-9)

    best = trace.best_dls
    assert all(later <= earlier for earlier, later in zip(best, best[1:]))


def test_same_word_steps_are_flagged(kitty):
    _, _, trace = greedy_search(kitty)
    previous = kitty.empty_segmentation()
    for step, segmentation in zip(trace.steps[1:], list(_replay(kitty, trace))[1:]):
        if len(step.points) == 2:
            spans = {previous.word_span(point) + (point.utterance_index,) for point in step.points}
            assert step.same_word == (len(spans) == 1)
        else:
            assert not step.same_word
        previous = segmentation


def test_ties_go_to_the_earliest_point(make_corpus):
    corpus = make_corpus("dudu", "dudu")
    _, _, trace = greedy_search(corpus)
    assert trace.steps[1].points[0].utterance_index == 0


def test_greedy_search_is_independent_of_threads(kitty):
    single = greedy_search(kitty, SearchConfig(threads=1))
    threaded = greedy_search(kitty, SearchConfig(threads=4))
    assert single[0] == threaded[0]
    assert single[2].steps == threaded[2].steps


def test_stop_early_ends_at_first_non_improving_step(kitty):
    _, report, trace = greedy_search(kitty, SearchConfig(stop_early=True))
    dls = trace.committed_dls
    assert all(later < earlier for earlier, later in zip(dls, dls[1:]))
    assert report.total_bits == pytest.approx(dls[-1])


def test_phonotactic_search_places_only_legal_boundaries(kitty, english_rules):
    segmentation, _, trace = greedy_search(kitty, SearchConfig(phonotactics=english_rules))
    for step, replayed in zip(trace.steps, _replay(kitty, trace)):
        assert is_admissible(kitty, replayed, english_rules)
        assert step.committed_dl == pytest.approx(total_dl(kitty, replayed).total_bits, rel=1e-9)
    assert is_admissible(kitty, segmentation, english_rules)


def test_phonotactic_search_without_legal_points(make_corpus):
    corpus = make_corpus("grinænd")
    segmentation, report, trace = greedy_search(corpus, SearchConfig(phonotactics=ClusterRules()))
    assert segmentation.boundary_count == 0
    assert len(trace.steps) == 1
    assert report.total_bits == pytest.approx(trace.steps[0].committed_dl)


def test_random_baseline_places_k_points(kitty):
    result = random_baseline(kitty, seed=5)
    assert (result.requested, result.placed) == (10, 10)
    assert result.segmentation.boundary_count == 10
    assert random_baseline(kitty, seed=5) == result


def test_random_baseline_runs_out_of_points(kitty, caplog):
    result = random_baseline(kitty, k=40, seed=1)
    assert (result.requested, result.placed) == (40, 30)
    assert boundary_score(result.segmentation, kitty.gold).recall == 100.0

    summary = run_trials(kitty, k=40, trials=3)
    assert summary.short_trials == 3
    assert summary.mean_placed == 30
    assert summary.boundary_recall == 100.0
    assert summary.boundary_accuracy == pytest.approx(10 / 30 * 100)
    assert "3 of 3 trials placed fewer" in caplog.text


def test_random_baseline_with_rules_stays_admissible(kitty, english_rules):
    for seed in range(20):
        result = random_baseline(kitty, k=4, rules=english_rules, seed=seed)
        assert is_admissible(kitty, result.segmentation, english_rules)


def test_random_baseline_contract(kitty):
    with pytest.raises(ContractViolationError):
        random_baseline(kitty, k=-1)
    unsegmented = type(kitty)(kitty.utterances, kitty.inventory)
    with pytest.raises(ContractViolationError):
        random_baseline(unsegmented)
    assert random_baseline(unsegmented, k=0).placed == 0


def test_run_trials_on_kitty(kitty):
    summary = run_trials(kitty, trials=1000, seed=0)
    assert summary.requested == 10
    assert summary.short_trials == 0
    assert summary.boundary_recall == pytest.approx(33.3, abs=3.0)
    assert summary.boundary_accuracy == pytest.approx(summary.boundary_recall)
    assert summary.to_dict()["undefined"]["boundary_accuracy"] == 0


def test_run_trials_is_deterministic(kitty):
    first = run_trials(kitty, trials=50, seed=11, threads=1)
    assert run_trials(kitty, trials=50, seed=11, threads=3) == first
    assert run_trials(kitty, trials=50, seed=12) != first


def test_run_trials_with_no_boundaries_has_undefined_accuracy(kitty):
    summary = run_trials(kitty, k=0, trials=5)
    assert summary.boundary_accuracy is None
    assert summary.undefined["boundary_accuracy"] == 5
    assert summary.boundary_recall == 0.0


def test_is_admissible(make_corpus, english_rules):
    corpus = make_corpus("kæt spɔz", "ʃ")
    assert is_admissible(corpus, corpus.gold, english_rules)
    scrambled = corpus.empty_segmentation().with_points([Position(0, 5)])
    assert not is_admissible(corpus, scrambled, english_rules)


def test_brute_force_small_corpus(make_corpus):
    corpus = make_corpus("du du", "si du")
    result = brute_force(corpus)
    assert result.hypotheses == 64
    assert result.report.total_bits == pytest.approx(total_dl(corpus, result.segmentation).total_bits)
    every = [
        total_dl(corpus, corpus.empty_segmentation().with_points(
            [point for bit, point in enumerate(_points(corpus)) if mask >> bit & 1]
        )).total_bits
        for mask in range(64)
    ]
    assert result.report.total_bits == pytest.approx(min(every))


def _points(corpus):
    return [Position(u, offset) for u, length in enumerate(corpus.lengths) for offset in range(1, length)]


def test_brute_force_refuses_large_corpora(kitty):
    with pytest.raises(LimitExceededError) as info:
        brute_force(kitty)
    assert (info.value.count, info.value.limit) == (30, 20)


def test_brute_force_with_rules_counts_admissible_hypotheses(make_corpus, english_rules):
    corpus = make_corpus("grinænd")
    result = brute_force(corpus, english_rules)
    # {}, {3}, {4}; {3, 4} would leave "n" without a vowel
    assert result.hypotheses == 3


def test_verify(make_corpus):
    verification = verify(make_corpus("du du", "si du"))
    assert verification.greedy_report.total_bits >= verification.brute_force.report.total_bits - 1e-9
    assert verification.verdict in ("equal", "greedy-suboptimal")
    assert verification.optimal == (verification.verdict == "equal")


def test_verify_checks_limit_first(kitty):
    with pytest.raises(LimitExceededError):
        verify(kitty, limit=5)


@pytest.mark.parametrize("lines, hypotheses", [
    (["ab"], 2),
    (["si ðə kɪti"], 128),
])
def test_verify_enumerates_every_subset(make_corpus, lines, hypotheses):
    verification = verify(make_corpus(*lines))
    assert verification.brute_force.hypotheses == hypotheses
