import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from .errors import ParseError
from .hypothesis import Position, Segmentation

logger = logging.getLogger(__name__)

DATA_DIRECTORY = Path(__file__).resolve().parent.parent / "data"
COMMENT_PREFIX = "#"
WORD_SEPARATOR = " "


class PhonemeClass(Enum):
    '''
    Describes the phonotactic class of a phoneme.

    Attributes:
        VOWEL: A vowel, diphthong, r-colored vowel or syllabic consonant.
        CONSONANT: Any other phoneme.
    '''
    VOWEL = "V"
    CONSONANT = "C"


@dataclass(frozen=True)
class Phoneme(object):
    '''
    A single phoneme, written as exactly one character.

    Attributes:
        symbol (str): The character representing the phoneme.
        phoneme_class (PhonemeClass): Whether the phoneme counts as a vowel or a consonant.
    '''
    symbol: str
    phoneme_class: PhonemeClass

    def __post_init__(self):
        if type(self.symbol) is not str or len(self.symbol) != 1:
            raise ValueError("symbol must be a single character")

        if self.symbol.isspace() or self.symbol == COMMENT_PREFIX:
            raise ValueError("symbol must not be whitespace or '{0}'".format(COMMENT_PREFIX))

    @property
    def is_vowel(self):
        return self.phoneme_class == PhonemeClass.VOWEL


class PhonemeInventory(object):
    '''
    The set of phonemes a corpus may use, with their vowel/consonant classification.

    Args:
        phonemes (iterable(Phoneme)): The phonemes of the inventory. Symbols must be unique.

    Raises:
        ValueError: A symbol was declared twice.
    '''

    def __init__(self, phonemes):
        self._phonemes = {}
        for phoneme in phonemes:
            if phoneme.symbol in self._phonemes:
                raise ValueError("symbol '{0}' is declared more than once".format(phoneme.symbol))
            self._phonemes[phoneme.symbol] = phoneme

        self.vowels = frozenset(symbol for symbol, phoneme in self._phonemes.items() if phoneme.is_vowel)
        self.consonants = frozenset(self._phonemes) - self.vowels

    @property
    def p(self):
        '''
        int: The number of phonemes in the inventory.
        '''
        return len(self._phonemes)

    @property
    def symbols(self):
        return frozenset(self._phonemes)

    def __contains__(self, symbol):
        return symbol in self._phonemes

    def __iter__(self):
        return iter(self._phonemes.values())

    def __len__(self):
        return len(self._phonemes)

    def restricted_to(self, symbols):
        '''
        Returns a new inventory containing only the given symbols.

        Args:
            symbols (iterable(str)): The symbols to keep. Symbols absent from this inventory are ignored.

        Returns:
            PhonemeInventory: The restricted inventory.
        '''
        keep = set(symbols)
        return PhonemeInventory(phoneme for symbol, phoneme in self._phonemes.items() if symbol in keep)


@dataclass(frozen=True)
class Utterance(object):
    '''
    One unsegmented utterance. Its two ends are fixed word boundaries; the candidate positions are the offsets
    1..L-1 between adjacent phonemes.

    Attributes:
        phonemes (str): The phoneme symbols of the utterance, one character each.
    '''
    phonemes: str

    def __len__(self):
        return len(self.phonemes)

    @property
    def internal_offsets(self):
        return range(1, len(self.phonemes))


@dataclass(frozen=True)
class CorpusStatistics(object):
    '''
    Summary counts for a corpus.

    Attributes:
        utterances (int): Number of utterances.
        phonemes (int): Number of phoneme tokens (characters).
        p (int): Number of distinct phonemes used.
        candidate_positions (int): Number of utterance-internal positions.
        gold_boundaries (int or None): Number of gold word boundaries inside utterances.
        tokens (int or None): Number of gold word tokens.
        types (int or None): Number of gold word types.
    '''
    utterances: int
    phonemes: int
    p: int
    candidate_positions: int
    gold_boundaries: int = None
    tokens: int = None
    types: int = None


class Corpus(object):
    '''
    An ordered, immutable sequence of unsegmented utterances, optionally with the gold segmentation derived
    from the original word spacing.

    Args:
        utterances (iterable(Utterance)): The utterances, in input order.
        inventory (PhonemeInventory): The inventory the utterances were validated against.
        gold (Segmentation or None): The gold segmentation, if known.

    Raises:
        ValueError: The gold segmentation does not fit the utterances.
    '''

    def __init__(self, utterances, inventory, gold=None):
        self.utterances = tuple(utterances)
        self.inventory = inventory
        self.lengths = tuple(len(utterance) for utterance in self.utterances)

        if gold is not None and gold.lengths != self.lengths:
            raise ValueError("gold segmentation does not match the utterances of the corpus")
        self.gold = gold

        self.used_inventory = inventory.restricted_to(
            symbol for utterance in self.utterances for symbol in utterance.phonemes
        )

    def __len__(self):
        return len(self.utterances)

    def __getitem__(self, index):
        return self.utterances[index]

    @property
    def used_symbols(self):
        return self.used_inventory.symbols

    @property
    def p(self):
        '''
        int: The number of unique phonemes actually used in the corpus.
        '''
        return self.used_inventory.p

    def empty_segmentation(self):
        return Segmentation(self.lengths)

    def words(self, segmentation):
        '''
        Yields every word token of the corpus under a segmentation, in corpus order.
        '''
        for utterance_index, utterance in enumerate(self.utterances):
            for start, end in segmentation.spans(utterance_index):
                yield utterance.phonemes[start:end]


def parse_inventory(text, path=None):
    '''
    Parses an inventory description: one phoneme per line as "<char> V" or "<char> C".

    Args:
        text (str): The inventory text.
        path (str, optional): The file the text came from, used in error messages.

    Raises:
        ParseError: A line is malformed or a symbol is declared twice.

    Returns:
        PhonemeInventory: The parsed inventory.
    '''

    if type(text) is not str:
        raise TypeError("text must be a str value")

    phonemes = []
    seen = set()
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIX):
            continue

        fields = stripped.split()
        if len(fields) != 2 or len(fields[0]) != 1:
            raise ParseError("expected '<char> V' or '<char> C'", path=path, line=line_number)

        symbol, class_code = fields
        try:
            phoneme_class = PhonemeClass(class_code.upper())
        except ValueError:
            raise ParseError("unknown phoneme class '{0}'".format(class_code), path=path, line=line_number) from None

        if symbol in seen:
            raise ParseError("symbol '{0}' declared more than once".format(symbol), path=path, line=line_number)
        seen.add(symbol)

        try:
            phonemes.append(Phoneme(symbol, phoneme_class))
        except ValueError as err:
            raise ParseError(str(err), path=path, line=line_number) from None

    if not phonemes:
        raise ParseError("inventory declares no phonemes", path=path)

    return PhonemeInventory(phonemes)


def parse_corpus(text, inventory, path=None):
    '''
    Parses a word-spaced transcription into unsegmented utterances and their gold segmentation.

    Each non-blank line that does not start with '#' is one utterance; words are separated by single spaces.
    The spaces are removed and their positions become the gold boundaries.

    Args:
        text (str): The transcription text.
        inventory (PhonemeInventory): The phonemes the text may use.
        path (str, optional): The file the text came from, used in error messages.

    Raises:
        TypeError: One or more arguments is the incorrect type.
        ParseError: The text contains an unknown symbol or an empty word, or contains no utterances.

    Returns:
        Corpus: The parsed corpus, with `gold` set.
    '''

    if type(text) is not str:
        raise TypeError("text must be a str value")

    if not isinstance(inventory, PhonemeInventory):
        raise TypeError("inventory must be a PhonemeInventory")

    utterances = []
    gold_offsets = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith(COMMENT_PREFIX):
            continue

        phonemes = []
        boundaries = []
        word_length = 0
        for column, symbol in enumerate(line, start=1):
            if symbol == WORD_SEPARATOR:
                if word_length == 0:
                    raise ParseError("empty word", path=path, line=line_number, column=column)
                boundaries.append(len(phonemes))
                word_length = 0
                continue

            if symbol not in inventory:
                raise ParseError(
                    "unknown symbol '{0}' (U+{1:04X})".format(symbol, ord(symbol)),
                    path=path, line=line_number, column=column
                )
            phonemes.append(symbol)
            word_length += 1

        if word_length == 0:
            raise ParseError("empty word", path=path, line=line_number, column=len(line))

        utterances.append(Utterance("".join(phonemes)))
        gold_offsets.append(boundaries)

    if not utterances:
        raise ParseError("corpus contains no utterances", path=path)

    gold = Segmentation([len(utterance) for utterance in utterances], gold_offsets)
    return Corpus(utterances, inventory, gold=gold)


def load_inventory(path=None):
    '''
    Reads an inventory file. Without a path, the bundled English inventory is read.

    Raises:
        ParseError: The file is malformed.
        OSError: The file could not be read.

    Returns:
        PhonemeInventory: The inventory.
    '''

    path = Path(path) if path is not None else DATA_DIRECTORY / "english.inv"
    inventory = parse_inventory(path.read_text(encoding="utf-8"), path=path)
    logger.info("Loaded %d phonemes (%d vowels) from %s", len(inventory), len(inventory.vowels), path)
    return inventory


def load_corpus(path, inventory):
    '''
    Reads and parses a corpus file.

    Raises:
        ParseError: The file is malformed.
        OSError: The file could not be read.

    Returns:
        Corpus: The corpus, with its gold segmentation.
    '''

    path = Path(path)
    corpus = parse_corpus(path.read_text(encoding="utf-8"), inventory, path=path)
    logger.info(
        "Loaded %d utterances (%d candidate positions, %d gold boundaries) from %s",
        len(corpus), candidate_positions(corpus)[0], corpus.gold.boundary_count, path
    )

    unused = inventory.symbols - corpus.used_symbols
    if unused:
        logger.warning("%d inventory symbols are unused by %s: %s", len(unused), path, " ".join(sorted(unused)))

    return corpus


def bundled_path(name):
    '''
    Returns the path of a resource shipped with the package (e.g. "kitty.txt", "english.rules").
    '''
    return DATA_DIRECTORY / name


def candidate_positions(corpus):
    '''
    Counts and enumerates the utterance-internal positions of a corpus.

    Returns:
        tuple(int, list(Position)): The number of positions, and the positions ordered by (utterance, offset).
    '''

    positions = [
        Position(utterance_index, offset)
        for utterance_index, utterance in enumerate(corpus.utterances)
        for offset in utterance.internal_offsets
    ]
    return len(positions), positions


def describe(corpus):
    '''
    Computes summary statistics for a corpus.

    Returns:
        CorpusStatistics: The statistics. Gold-derived fields are `None` when the corpus has no gold.
    '''

    statistics = {
        "utterances": len(corpus),
        "phonemes": sum(corpus.lengths),
        "p": corpus.p,
        "candidate_positions": sum(corpus.lengths) - len(corpus)
    }

    if corpus.gold is not None:
        gold_words = list(corpus.words(corpus.gold))
        statistics["gold_boundaries"] = corpus.gold.boundary_count
        statistics["tokens"] = len(gold_words)
        statistics["types"] = len(set(gold_words))

    return CorpusStatistics(**statistics)


def render(corpus, segmentation):
    '''
    Writes a segmentation back as word-spaced text, one utterance per line.

    Returns:
        str: The text. For the gold segmentation this reproduces the parsed input (without comments).
    '''

    if segmentation.lengths != corpus.lengths:
        raise ValueError("segmentation does not match the utterances of the corpus")

    lines = []
    for utterance_index, utterance in enumerate(corpus.utterances):
        lines.append(WORD_SEPARATOR.join(
            utterance.phonemes[start:end] for start, end in segmentation.spans(utterance_index)
        ))
    return "\n".join(lines) + "\n"
