import logging
from dataclasses import dataclass, field
from pathlib import Path
from .errors import ParseError

logger = logging.getLogger(__name__)

EMPTY_CLUSTER_MARK = "-"
INITIAL_HEADER = "INITIAL:"
FINAL_HEADER = "FINAL:"


@dataclass(frozen=True)
class ClusterRules(object):
    '''
    The consonant clusters allowed at the start and at the end of a word. The empty cluster is always
    allowed, so vowel-initial and vowel-final words are legal.

    Attributes:
        initial_clusters (frozenset(str)): Legal word-initial consonant runs.
        final_clusters (frozenset(str)): Legal word-final consonant runs.
    '''
    initial_clusters: frozenset = field(default_factory=frozenset)
    final_clusters: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "initial_clusters", frozenset(self.initial_clusters) | {""})
        object.__setattr__(self, "final_clusters", frozenset(self.final_clusters) | {""})

    def check(self, inventory):
        '''
        Verifies that every cluster consists of consonants of an inventory.

        Raises:
            ValueError: A cluster contains a vowel or an unknown symbol.
        '''
        for cluster in self.initial_clusters | self.final_clusters:
            for symbol in cluster:
                if symbol not in inventory.consonants:
                    raise ValueError("cluster '{0}' contains '{1}', which is not a consonant".format(cluster, symbol))


@dataclass(frozen=True)
class ExtractionReport(object):
    '''
    The result of extracting cluster rules from a gold segmentation.

    Attributes:
        rules (ClusterRules): The maximally permissive rules.
        vowelless_words (tuple(str)): Gold word types without any vowel, in order of first occurrence.
    '''
    rules: ClusterRules
    vowelless_words: tuple = ()


def leading_consonants(word, vowels):
    '''
    Returns the maximal run of consonants at the start of a word.
    '''
    for index, symbol in enumerate(word):
        if symbol in vowels:
            return word[:index]
    return word


def trailing_consonants(word, vowels):
    '''
    Returns the maximal run of consonants at the end of a word.
    '''
    for index in range(len(word) - 1, -1, -1):
        if word[index] in vowels:
            return word[index + 1:]
    return word


def has_vowel(word, vowels):
    return any(symbol in vowels for symbol in word)


def is_legal_word(word, rules, inventory):
    '''
    Decides whether a word is phonotactically legal: it contains a vowel, and its leading and trailing
    consonant runs are legal initial and final clusters.

    Args:
        word (str): A nonempty phoneme sequence.
        rules (ClusterRules): The cluster rules.
        inventory (PhonemeInventory): Supplies the vowel classification.

    Returns:
        bool: Whether the word is legal.
    '''

    vowels = inventory.vowels
    return (
        has_vowel(word, vowels)
        and leading_consonants(word, vowels) in rules.initial_clusters
        and trailing_consonants(word, vowels) in rules.final_clusters
    )


def is_legal_split(left, right, rules, vowels):
    '''
    Decides whether a boundary between two adjacent words is legal: both words contain a vowel, the left word
    ends in a legal final cluster and the right word starts with a legal initial cluster.
    '''
    return (
        has_vowel(left, vowels)
        and has_vowel(right, vowels)
        and trailing_consonants(left, vowels) in rules.final_clusters
        and leading_consonants(right, vowels) in rules.initial_clusters
    )


def _legal_offsets_in_word(phonemes, start, end, rules, vowels):
    word = phonemes[start:end]
    return [
        start + cut for cut in range(1, len(word))
        if is_legal_split(word[:cut], word[cut:], rules, vowels)
    ]


class ValidPointSet(object):
    '''
    The currently legal insertion offsets of every utterance. Instances are treated as immutable snapshots:
    :func:`refresh_after_insertion` returns a new set sharing the untouched utterances.

    Args:
        offsets (iterable(iterable(int))): The legal offsets of each utterance.
    '''

    def __init__(self, offsets):
        self._offsets = tuple(frozenset(utterance_offsets) for utterance_offsets in offsets)

    def __len__(self):
        return sum(len(utterance_offsets) for utterance_offsets in self._offsets)

    def __contains__(self, position):
        return position.offset in self._offsets[position.utterance_index]

    def __eq__(self, other):
        if not isinstance(other, ValidPointSet):
            return NotImplemented
        return self._offsets == other._offsets

    def __hash__(self):
        return hash(self._offsets)

    def offsets(self, utterance_index):
        '''
        Returns the sorted legal offsets of one utterance.
        '''
        return sorted(self._offsets[utterance_index])

    def _replace(self, utterance_index, utterance_offsets):
        offsets = list(self._offsets)
        offsets[utterance_index] = frozenset(utterance_offsets)
        replaced = ValidPointSet.__new__(ValidPointSet)
        replaced._offsets = tuple(offsets)
        return replaced


def legal_points(utterance, current_offsets, rules, inventory):
    '''
    Computes the legal insertion offsets of one utterance under its current boundaries.

    Args:
        utterance (Utterance or str): The utterance.
        current_offsets (iterable(int)): The boundaries already placed in the utterance.
        rules (ClusterRules): The cluster rules.
        inventory (PhonemeInventory): Supplies the vowel classification.

    Returns:
        list(int): The sorted offsets whose insertion splits their word into two legal words.
    '''

    phonemes = getattr(utterance, "phonemes", utterance)
    cuts = [0] + sorted(current_offsets) + [len(phonemes)]
    offsets = []
    for start, end in zip(cuts, cuts[1:]):
        offsets.extend(_legal_offsets_in_word(phonemes, start, end, rules, inventory.vowels))
    return offsets


def initial_valid_points(corpus, segmentation, rules):
    '''
    Computes the legal insertion points of a whole corpus under a segmentation.

    Returns:
        ValidPointSet: The legal points.
    '''
    return ValidPointSet(
        legal_points(utterance, segmentation.offsets(utterance_index), rules, corpus.inventory)
        for utterance_index, utterance in enumerate(corpus.utterances)
    )


def refresh_after_insertion(valid_set, utterance_index, utterance, current_offsets, inserted_offset, rules,
                            inventory):
    '''
    Updates the legal points after a boundary was committed. Only the offsets inside the two words created by
    the insertion are recomputed; every other offset, and every other utterance, is kept as is.

    Args:
        valid_set (ValidPointSet): The legal points before the insertion.
        utterance_index (int): The utterance that received the boundary.
        utterance (Utterance or str): That utterance.
        current_offsets (iterable(int)): The utterance's boundaries, including the inserted one.
        inserted_offset (int): The committed boundary.
        rules (ClusterRules): The cluster rules.
        inventory (PhonemeInventory): Supplies the vowel classification.

    Returns:
        ValidPointSet: The updated legal points.
    '''

    phonemes = getattr(utterance, "phonemes", utterance)
    boundaries = sorted(current_offsets)
    position = boundaries.index(inserted_offset)
    start = boundaries[position - 1] if position > 0 else 0
    end = boundaries[position + 1] if position + 1 < len(boundaries) else len(phonemes)

    kept = {offset for offset in valid_set.offsets(utterance_index) if not start < offset < end}
    kept.update(_legal_offsets_in_word(phonemes, start, inserted_offset, rules, inventory.vowels))
    kept.update(_legal_offsets_in_word(phonemes, inserted_offset, end, rules, inventory.vowels))
    return valid_set._replace(utterance_index, kept)


def extract_rules(corpus):
    '''
    Extracts the maximally permissive cluster rules from a gold segmentation: every maximal leading consonant
    run of a gold word is a legal initial cluster, every maximal trailing run a legal final cluster.

    Gold words without a vowel are reported and logged; their consonants are not turned into clusters. As in
    every ClusterRules, the empty cluster is part of both sets even when every gold word starts or ends with a
    consonant, so dumped rules always list "-" in both sections.

    Args:
        corpus (Corpus): A corpus with a gold segmentation.

    Raises:
        ValueError: The corpus has no gold segmentation.

    Returns:
        ExtractionReport: The rules and the vowelless gold words.
    '''

    if corpus.gold is None:
        raise ValueError("rule extraction needs a corpus with a gold segmentation")

    vowels = corpus.inventory.vowels
    initial = set()
    final = set()
    vowelless = []
    for word in dict.fromkeys(corpus.words(corpus.gold)):
        if not has_vowel(word, vowels):
            vowelless.append(word)
            continue
        initial.add(leading_consonants(word, vowels))
        final.add(trailing_consonants(word, vowels))

    if vowelless:
        logger.warning("%d gold words contain no vowel: %s", len(vowelless), " ".join(vowelless))

    rules = ClusterRules(frozenset(initial), frozenset(final))
    logger.info("Extracted %d initial and %d final clusters", len(rules.initial_clusters), len(rules.final_clusters))
    return ExtractionReport(rules=rules, vowelless_words=tuple(vowelless))


def parse_rules(text, path=None):
    '''
    Parses a rules file: an "INITIAL:" section and a "FINAL:" section, one cluster per line, "-" for the empty
    cluster, '#' comments.

    Raises:
        ParseError: A cluster appears outside a section, or a section header is missing.

    Returns:
        ClusterRules: The rules.
    '''

    if type(text) is not str:
        raise TypeError("text must be a str value")

    sections = {INITIAL_HEADER: set(), FINAL_HEADER: set()}
    current = None
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue

        if stripped.upper() in sections:
            current = sections[stripped.upper()]
            continue

        if current is None:
            raise ParseError("cluster before any section header", path=path, line=line_number)
        if len(stripped.split()) != 1:
            raise ParseError("expected a single cluster per line", path=path, line=line_number)

        current.add("" if stripped == EMPTY_CLUSTER_MARK else stripped)

    for header, clusters in sections.items():
        if not clusters:
            raise ParseError("missing or empty section '{0}'".format(header), path=path)

    return ClusterRules(frozenset(sections[INITIAL_HEADER]), frozenset(sections[FINAL_HEADER]))


def load_rules(path, inventory=None):
    '''
    Reads a rules file and, when an inventory is given, checks its clusters against it.

    Raises:
        ParseError: The file is malformed or a cluster contains a non-consonant.
        OSError: The file could not be read.

    Returns:
        ClusterRules: The rules.
    '''

    path = Path(path)
    rules = parse_rules(path.read_text(encoding="utf-8"), path=path)

    if inventory is not None:
        try:
            rules.check(inventory)
        except ValueError as err:
            raise ParseError(str(err), path=path) from None

    logger.info("Loaded %d initial and %d final clusters from %s",
                len(rules.initial_clusters), len(rules.final_clusters), path)
    return rules


def dump_rules(rules):
    '''
    Writes rules in the rules-file format, clusters sorted, "-" for the empty cluster.

    Returns:
        str: The rules text.
    '''

    lines = []
    for header, clusters in ((INITIAL_HEADER, rules.initial_clusters), (FINAL_HEADER, rules.final_clusters)):
        lines.append(header)
        lines.extend(cluster or EMPTY_CLUSTER_MARK for cluster in sorted(clusters, key=lambda c: (len(c), c)))
    return "\n".join(lines) + "\n"
