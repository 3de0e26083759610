import random
import pytest
from collections import Counter
from mdlseg.seg import Position, Segmentation, Lexicon, build_lexicon, insertion_changes, apply_insertion, \
    encode_sample
from mdlseg.seg.errors import ContractViolationError


def test_segmentation_basics():
    segmentation = Segmentation([5, 3], [[3, 1], []])
    assert segmentation.offsets(0) == (1, 3)
    assert segmentation.boundary_count == 2
    assert Position(0, 3) in segmentation
    assert Position(0, 2) not in segmentation
    assert list(segmentation.positions()) == [Position(0, 1), Position(0, 3)]
    assert segmentation.spans(0) == [(0, 1), (1, 3), (3, 5)]
    assert segmentation.spans(1) == [(0, 3)]


@pytest.mark.parametrize("offsets", [[[0]], [[5]], [[2, 2]]])
def test_segmentation_rejects_bad_offsets(offsets):
    with pytest.raises(ContractViolationError):
        Segmentation([5], offsets)


def test_word_span():
    segmentation = Segmentation([8], [[2, 5]])
    assert segmentation.word_span(Position(0, 1)) == (0, 2)
    assert segmentation.word_span(Position(0, 3)) == (2, 5)
    assert segmentation.word_span(Position(0, 7)) == (5, 8)


def test_with_points_leaves_original_untouched():
    empty = Segmentation([4, 4])
    extended = empty.with_points([Position(1, 2), Position(0, 1)])
    assert empty.boundary_count == 0
    assert extended.offsets(0) == (1,)
    assert extended.offsets(1) == (2,)
    assert extended == Segmentation([4, 4], [[1], [2]])
    assert hash(extended) == hash(Segmentation([4, 4], [[1], [2]]))


@pytest.mark.parametrize("points", [
    [Position(0, 2)],
    [Position(0, 1), Position(0, 1)],
    [Position(0, 4)],
    [Position(1, 1)],
])
def test_with_points_rejects_invalid_points(points):
    segmentation = Segmentation([4], [[2]])
    with pytest.raises(ContractViolationError):
        segmentation.with_points(points)


def test_kitty_gold_lexicon(kitty):
    lexicon = build_lexicon(kitty, kitty.gold)
    assert lexicon.entries == {"du": 2, "ju": 2, "si": 2, "ðə": 3, "kɪti": 3, "lYk": 1}
    assert (lexicon.n, lexicon.m, lexicon.sum_len, lexicon.max_len) == (6, 13, 15, 4)


def test_scrambled_kitty_lexicon(kitty, make_corpus):
    scrambled = make_corpus("duj us ið əkɪt i", "sið ək ɪti", "du jul Yk ðək ɪti")
    lexicon = build_lexicon(kitty, scrambled.gold)
    assert lexicon.n == 12
    assert lexicon.m == 13
    assert lexicon.frequency("ɪti") == 2


def test_unsegmented_lexicon(kitty):
    lexicon = build_lexicon(kitty, kitty.empty_segmentation())
    assert lexicon.n == 3
    assert lexicon.m == 3
    assert lexicon.max_len == 13


def test_update_maintains_aggregates():
    lexicon = Lexicon.from_counts({"ab": 2, "c": 1})
    lexicon.update({"ab": -2, "a": 2, "b": 2})
    expected = Lexicon.from_counts({"a": 2, "b": 2, "c": 1})
    assert lexicon.matches(expected)
    assert "ab" not in lexicon
    assert lexicon.length_counts == {1: 3}


def test_update_rejects_negative_frequency():
    lexicon = Lexicon.from_counts({"ab": 1})
    with pytest.raises(ContractViolationError):
        lexicon.update({"ab": -2})


def test_insertion_changes_single_and_same_word_pair(kitty):
    empty = kitty.empty_segmentation()
    assert insertion_changes(kitty, empty, [Position(1, 2)]) == Counter({"si": 1, "ðəkɪti": 1, "siðəkɪti": -1})
    assert insertion_changes(kitty, empty, [Position(1, 2), Position(1, 4)]) == Counter(
        {"si": 1, "ðə": 1, "kɪti": 1, "siðəkɪti": -1}
    )


def test_apply_insertion(kitty):
    empty = kitty.empty_segmentation()
    lexicon = build_lexicon(kitty, empty)
    segmentation, updated = apply_insertion(kitty, empty, lexicon, [Position(0, 2), Position(2, 2)])
    assert segmentation.boundary_count == 2
    assert updated.matches(build_lexicon(kitty, segmentation))
    assert lexicon.m == 3
    assert lexicon.matches(build_lexicon(kitty, empty))
    assert updated is not lexicon


def test_apply_insertion_limits_points(kitty):
    empty = kitty.empty_segmentation()
    lexicon = build_lexicon(kitty, empty)
    with pytest.raises(ContractViolationError):
        apply_insertion(kitty, empty, lexicon, [])
    with pytest.raises(ContractViolationError):
        apply_insertion(kitty, empty, lexicon, [Position(0, 1), Position(0, 2), Position(0, 3)])


def test_incremental_lexicon_matches_rebuild_on_random_walks(kitty):
    generator = random.Random(7)
    segmentation = kitty.empty_segmentation()
    lexicon = build_lexicon(kitty, segmentation)
    free = [Position(u, o) for u, length in enumerate(kitty.lengths) for o in range(1, length)]
    generator.shuffle(free)
    while free:
        points = [free.pop() for _ in range(min(len(free), generator.choice([1, 2])))]
        segmentation, lexicon = apply_insertion(kitty, segmentation, lexicon, points)
        assert lexicon.matches(build_lexicon(kitty, segmentation))
    assert lexicon.n == len(set("".join(u.phonemes for u in kitty.utterances)))


def test_encode_sample(kitty):
    words, encoded = encode_sample(kitty, kitty.gold)
    assert words == ["du", "ju", "si", "ðə", "kɪti", "lYk"]
    assert encoded == [(1, 2, 3, 4, 5), (3, 4, 5), (1, 2, 6, 4, 5)]
