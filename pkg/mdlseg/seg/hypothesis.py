import math
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass
from .errors import ContractViolationError


@dataclass(frozen=True, order=True)
class Position(object):
    '''
    An utterance-internal position: the boundary between phonemes `offset - 1` and `offset`.

    Attributes:
        utterance_index (int): 0-based index of the utterance in its corpus.
        offset (int): Offset inside the utterance, between 1 and L-1.
    '''
    utterance_index: int
    offset: int


class Segmentation(object):
    '''
    A segmentation hypothesis: for every utterance, the sorted set of internal offsets at which a word boundary
    is placed. Instances are immutable; :meth:`with_points` returns a new hypothesis sharing the untouched
    utterances.

    Args:
        lengths (iterable(int)): The length in phonemes of each utterance.
        offsets (iterable(iterable(int)), optional): The boundary offsets of each utterance. Defaults to no
            boundaries at all.

    Raises:
        ContractViolationError: An offset is out of bounds or repeated.
    '''
    __slots__ = ('lengths', '_offsets')

    def __init__(self, lengths, offsets=None):
        self.lengths = tuple(lengths)

        if offsets is None:
            self._offsets = tuple(() for _ in self.lengths)
            return

        offsets = [tuple(sorted(utterance_offsets)) for utterance_offsets in offsets]
        if len(offsets) != len(self.lengths):
            raise ContractViolationError("expected offsets for {0} utterances, got {1}".format(
                len(self.lengths), len(offsets)))

        for utterance_index, (length, utterance_offsets) in enumerate(zip(self.lengths, offsets)):
            if len(set(utterance_offsets)) != len(utterance_offsets):
                raise ContractViolationError("duplicate boundary in utterance {0}".format(utterance_index))
            if utterance_offsets and (utterance_offsets[0] < 1 or utterance_offsets[-1] > length - 1):
                raise ContractViolationError("boundary outside utterance {0} (length {1})".format(
                    utterance_index, length))

        self._offsets = tuple(offsets)

    def __len__(self):
        return len(self.lengths)

    def __eq__(self, other):
        if not isinstance(other, Segmentation):
            return NotImplemented
        return self.lengths == other.lengths and self._offsets == other._offsets

    def __hash__(self):
        return hash((self.lengths, self._offsets))

    def __repr__(self):
        return "Segmentation({0} utterances, {1} boundaries)".format(len(self.lengths), self.boundary_count)

    def __contains__(self, position):
        utterance_offsets = self._offsets[position.utterance_index]
        index = bisect_left(utterance_offsets, position.offset)
        return index < len(utterance_offsets) and utterance_offsets[index] == position.offset

    @property
    def boundary_count(self):
        return sum(len(utterance_offsets) for utterance_offsets in self._offsets)

    def offsets(self, utterance_index):
        '''
        Returns the sorted boundary offsets of one utterance.
        '''
        return self._offsets[utterance_index]

    def positions(self):
        '''
        Yields every boundary as a :class:`Position`, ordered by (utterance, offset).
        '''
        for utterance_index, utterance_offsets in enumerate(self._offsets):
            for offset in utterance_offsets:
                yield Position(utterance_index, offset)

    def spans(self, utterance_index):
        '''
        Returns the (start, end) spans of the words of one utterance.
        '''
        cuts = (0,) + self._offsets[utterance_index] + (self.lengths[utterance_index],)
        return list(zip(cuts, cuts[1:]))

    def word_span(self, position):
        '''
        Returns the (start, end) span of the word that contains an internal offset.

        The offset itself must not already be a boundary.
        '''
        utterance_offsets = self._offsets[position.utterance_index]
        index = bisect_left(utterance_offsets, position.offset)
        start = utterance_offsets[index - 1] if index > 0 else 0
        end = utterance_offsets[index] if index < len(utterance_offsets) else self.lengths[position.utterance_index]
        return start, end

    def with_points(self, points):
        '''
        Returns a new segmentation with additional boundaries.

        Args:
            points (iterable(Position)): The positions to add.

        Raises:
            ContractViolationError: A point is already a boundary, is repeated, or is out of bounds.

        Returns:
            Segmentation: The extended hypothesis.
        '''

        offsets = list(self._offsets)
        for position in points:
            utterance_index = position.utterance_index
            if not 0 <= utterance_index < len(self.lengths):
                raise ContractViolationError("no utterance {0}".format(utterance_index))
            if not 1 <= position.offset < self.lengths[utterance_index]:
                raise ContractViolationError("offset {0} is not internal to utterance {1}".format(
                    position.offset, utterance_index))

            utterance_offsets = list(offsets[utterance_index])
            index = bisect_left(utterance_offsets, position.offset)
            if index < len(utterance_offsets) and utterance_offsets[index] == position.offset:
                raise ContractViolationError("{0} is already a boundary".format(position))
            utterance_offsets.insert(index, position.offset)
            offsets[utterance_index] = tuple(utterance_offsets)

        extended = Segmentation.__new__(Segmentation)
        extended.lengths = self.lengths
        extended._offsets = tuple(offsets)
        return extended


def _flogf(frequency):
    return frequency * math.log2(frequency) if frequency > 0 else 0.0


def _logf(frequency):
    return math.log2(frequency) if frequency > 0 else 0.0


class Lexicon(object):
    '''
    The word types used by a hypothesis with their token frequencies, plus the aggregates the description
    length needs. Every aggregate is kept equal to its from-scratch value under :meth:`update`.

    Attributes:
        n (int): Number of word types.
        m (int): Number of word tokens.
        sum_len (int): Total length in phonemes of all word types.
        sum_flogf (float): Sum over types of f * log2(f).
        sum_logf (float): Sum over types of log2(f).
    '''

    def __init__(self):
        self._entries = {}
        self._length_counts = Counter()
        self.n = 0
        self.m = 0
        self.sum_len = 0
        self.sum_flogf = 0.0
        self.sum_logf = 0.0

    @classmethod
    def from_counts(cls, counts):
        '''
        Builds a lexicon from a word to frequency mapping.
        '''
        lexicon = cls()
        lexicon.update(counts)
        return lexicon

    def __len__(self):
        return len(self._entries)

    def __contains__(self, word):
        return word in self._entries

    def __iter__(self):
        return iter(self._entries)

    def __repr__(self):
        return "Lexicon(n={0}, m={1})".format(self.n, self.m)

    @property
    def entries(self):
        '''
        dict: A copy of the word to frequency mapping.
        '''
        return dict(self._entries)

    @property
    def types(self):
        return frozenset(self._entries)

    @property
    def max_len(self):
        '''
        int: Length of the longest word type, 0 for an empty lexicon.
        '''
        return max(self._length_counts) if self._length_counts else 0

    @property
    def length_counts(self):
        '''
        dict: Number of word types of each length.
        '''
        return dict(self._length_counts)

    def frequency(self, word):
        return self._entries.get(word, 0)

    def copy(self):
        duplicate = Lexicon.__new__(Lexicon)
        duplicate._entries = dict(self._entries)
        duplicate._length_counts = Counter(self._length_counts)
        duplicate.n = self.n
        duplicate.m = self.m
        duplicate.sum_len = self.sum_len
        duplicate.sum_flogf = self.sum_flogf
        duplicate.sum_logf = self.sum_logf
        return duplicate

    def update(self, changes):
        '''
        Applies frequency changes in place, in time proportional to the number of changed types.

        Args:
            changes (dict(str, int)): Frequency delta per word. Entries reaching zero are removed.

        Raises:
            ContractViolationError: A frequency would become negative.
        '''

        for word, delta in changes.items():
            if delta == 0:
                continue

            old = self._entries.get(word, 0)
            new = old + delta
            if new < 0:
                raise ContractViolationError("frequency of '{0}' would become {1}".format(word, new))

            self.m += delta
            self.sum_flogf += _flogf(new) - _flogf(old)
            self.sum_logf += _logf(new) - _logf(old)

            if old == 0:
                self.n += 1
                self.sum_len += len(word)
                self._length_counts[len(word)] += 1
            elif new == 0:
                self.n -= 1
                self.sum_len -= len(word)
                self._length_counts[len(word)] -= 1
                if self._length_counts[len(word)] == 0:
                    del self._length_counts[len(word)]

            if new == 0:
                del self._entries[word]
            else:
                self._entries[word] = new

    def matches(self, other, tolerance=1e-9):
        '''
        Compares entries exactly and the floating-point aggregates within a relative tolerance.
        '''
        return (
            self._entries == other._entries
            and (self.n, self.m, self.sum_len, self.max_len) == (other.n, other.m, other.sum_len, other.max_len)
            and math.isclose(self.sum_flogf, other.sum_flogf, rel_tol=tolerance, abs_tol=tolerance)
            and math.isclose(self.sum_logf, other.sum_logf, rel_tol=tolerance, abs_tol=tolerance)
        )


def build_lexicon(corpus, segmentation):
    '''
    Lists the words used by a segmentation hypothesis, with token frequencies.

    Args:
        corpus (Corpus): The corpus being segmented.
        segmentation (Segmentation): The hypothesis.

    Returns:
        Lexicon: The lexicon of the hypothesis.
    '''
    return Lexicon.from_counts(Counter(corpus.words(segmentation)))


def insertion_changes(corpus, segmentation, points):
    '''
    Computes the lexicon frequency changes caused by adding boundaries.

    Each affected token loses one occurrence of its word; every piece it is split into gains one.

    Returns:
        Counter: Frequency delta per word.
    '''

    by_word = {}
    for position in points:
        start, end = segmentation.word_span(position)
        by_word.setdefault((position.utterance_index, start, end), []).append(position.offset)

    changes = Counter()
    for (utterance_index, start, end), cuts in by_word.items():
        phonemes = corpus.utterances[utterance_index].phonemes
        changes[phonemes[start:end]] -= 1
        edges = [start] + sorted(cuts) + [end]
        for left, right in zip(edges, edges[1:]):
            changes[phonemes[left:right]] += 1
    return changes


def apply_insertion(corpus, segmentation, lexicon, points):
    '''
    Adds one or two boundaries to a hypothesis and updates its lexicon incrementally.

    The inputs are left untouched. Copying the lexicon costs O(n); the aggregates of the copy are then updated
    in O(affected types).

    Args:
        corpus (Corpus): The corpus being segmented.
        segmentation (Segmentation): The current hypothesis.
        lexicon (Lexicon): The lexicon of the current hypothesis.
        points (iterable(Position)): One or two positions that are not yet boundaries.

    Raises:
        ContractViolationError: A point is already a boundary, repeated, or out of bounds, or more than two
            points were given.

    Returns:
        tuple(Segmentation, Lexicon): The extended hypothesis and its lexicon.
    '''

    points = list(points)
    if not 1 <= len(points) <= 2:
        raise ContractViolationError("an insertion adds one or two points, got {0}".format(len(points)))

    extended = segmentation.with_points(points)
    updated = lexicon.copy()
    updated.update(insertion_changes(corpus, segmentation, points))
    return extended, updated


def encode_sample(corpus, segmentation):
    '''
    Numbers the lexicon entries from 1 in order of first occurrence and rewrites every utterance as the
    sequence of its words' numbers.

    Returns:
        tuple(list(str), list(tuple(int))): The numbered words and the encoded utterances.
    '''

    index = {}
    encoded = []
    for utterance_index, utterance in enumerate(corpus.utterances):
        codes = []
        for start, end in segmentation.spans(utterance_index):
            word = utterance.phonemes[start:end]
            if word not in index:
                index[word] = len(index) + 1
            codes.append(index[word])
        encoded.append(tuple(codes))
    return list(index), encoded

