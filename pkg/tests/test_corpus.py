import pytest
from mdlseg.seg import PhonemeClass, Phoneme, PhonemeInventory, Position, parse_inventory, parse_corpus, \
    candidate_positions, describe, render, bundled_path
from mdlseg.seg.errors import ParseError

KITTY_LINES = ["du ju si ðə kɪti", "si ðə kɪti", "du ju lYk ðə kɪti"]


def test_parse_inventory():
    inventory = parse_inventory("# comment\n\na V\nb C\nc c\n")
    assert inventory.p == 3
    assert inventory.vowels == {"a"}
    assert inventory.consonants == {"b", "c"}
    assert Phoneme("b", PhonemeClass.CONSONANT) in list(inventory)


@pytest.mark.parametrize("text, line", [
    ("a V\nb X\n", 2),
    ("a V\nab C\n", 2),
    ("a V\na C\n", 2),
    ("a\n", 1),
])
def test_parse_inventory_rejects_malformed_lines(text, line):
    with pytest.raises(ParseError) as info:
        parse_inventory(text, path="bad.inv")
    assert info.value.line == line
    assert "bad.inv, line {0}".format(line) in str(info.value)


def test_parse_inventory_rejects_empty_text():
    with pytest.raises(ParseError):
        parse_inventory("# nothing\n")


def test_inventory_rejects_duplicates():
    with pytest.raises(ValueError):
        PhonemeInventory([Phoneme("a", PhonemeClass.VOWEL), Phoneme("a", PhonemeClass.CONSONANT)])


def test_restricted_inventory(inventory):
    restricted = inventory.restricted_to("duq")
    assert restricted.symbols == {"d", "u"}
    assert restricted.vowels == {"u"}


def test_bundled_inventory(inventory):
    assert "ə" in inventory.vowels
    assert "Y" in inventory.vowels
    assert "ð" in inventory.consonants
    assert inventory.vowels.isdisjoint(inventory.consonants)


def test_kitty_statistics(kitty):
    statistics = describe(kitty)
    assert statistics.utterances == 3
    assert statistics.phonemes == 33
    assert statistics.p == 12
    assert statistics.candidate_positions == 30
    assert statistics.gold_boundaries == 10
    assert statistics.tokens == 13
    assert statistics.types == 6


def test_kitty_gold_offsets(kitty):
    assert [utterance.phonemes for utterance in kitty.utterances] == [
        "dujusiðəkɪti", "siðəkɪti", "dujulYkðəkɪti"
    ]
    assert kitty.gold.offsets(0) == (2, 4, 6, 8)
    assert kitty.gold.offsets(1) == (2, 4)
    assert kitty.gold.offsets(2) == (2, 4, 7, 9)


def test_candidate_positions(kitty):
    count, positions = candidate_positions(kitty)
    assert count == 30
    assert positions[0] == Position(0, 1)
    assert positions[11] == Position(1, 1)
    assert positions == sorted(positions)


def test_p_counts_used_symbols_only(make_corpus):
    corpus = make_corpus("ab ba", "a")
    assert corpus.p == 2
    assert corpus.inventory.p > 2
    assert corpus.used_inventory.vowels == {"a"}
    assert corpus.used_inventory.consonants == {"b"}


def test_comments_and_blank_lines_are_skipped(inventory):
    corpus = parse_corpus("# header\n\ndu ju\n\n# trailer\nsi\n", inventory)
    assert len(corpus) == 2
    assert corpus.gold.offsets(0) == (2,)
    assert corpus.gold.offsets(1) == ()


def test_unknown_symbol_names_position_and_code_point(inventory):
    with pytest.raises(ParseError) as info:
        parse_corpus("du ju\nduX ju\n", inventory, path="kids.txt")
    assert (info.value.line, info.value.column) == (2, 3)
    assert "U+0058" in str(info.value)
    assert str(info.value).startswith("kids.txt, line 2, column 3")


@pytest.mark.parametrize("line, column", [
    ("du  ju", 4),
    (" du", 1),
    ("du ", 3),
])
def test_empty_words_are_rejected(inventory, line, column):
    with pytest.raises(ParseError) as info:
        parse_corpus(line + "\n", inventory)
    assert info.value.column == column


def test_empty_corpus_is_rejected(inventory):
    with pytest.raises(ParseError):
        parse_corpus("# only a comment\n", inventory)


def test_parse_corpus_checks_types(inventory):
    with pytest.raises(TypeError):
        parse_corpus(b"du ju", inventory)
    with pytest.raises(TypeError):
        parse_corpus("du ju", {"d", "u", "j"})


def test_render_reproduces_gold(kitty):
    assert render(kitty, kitty.gold) == "\n".join(KITTY_LINES) + "\n"


def test_render_unsegmented(kitty):
    assert render(kitty, kitty.empty_segmentation()).splitlines()[1] == "siðəkɪti"


def test_render_rejects_foreign_segmentation(kitty, make_corpus):
    other = make_corpus("du ju")
    with pytest.raises(ValueError):
        render(kitty, other.gold)


def test_bundled_resources_exist():
    for name in ("english.inv", "english.rules", "kitty.txt", "child.txt", "adult.txt"):
        assert bundled_path(name).is_file()


def test_child_corpus_size(child):
    statistics = describe(child)
    assert 450 <= statistics.tokens <= 550
    assert 130 <= statistics.types <= 170
    assert statistics.tokens > 3 * statistics.types


def test_adult_corpus_size(adult, child):
    statistics = describe(adult)
    assert 440 <= statistics.tokens <= 500
    assert 190 <= statistics.types <= 230
    assert statistics.types > describe(child).types
    assert statistics.tokens / len(adult) > describe(child).tokens / len(child)
