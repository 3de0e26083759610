import math
from dataclasses import dataclass
from numbers import Integral
import numpy as np
from .errors import ContractViolationError
from .hypothesis import build_lexicon

# longest distinct word lengths tracked per step; a candidate removes at most two types
LENGTH_LEVELS = 3


def _check_count(name, value, minimum):
    if not isinstance(value, Integral) or isinstance(value, bool):
        raise TypeError("{0} must be an int value".format(name))
    if value < minimum:
        raise ContractViolationError("{0} must be at least {1}, got {2}".format(name, minimum, value))


def int_code_len(x):
    '''
    Returns the length in bits of the self-delimiting code for a nonnegative integer, using the continuous
    approximation 1.5 + log2(x + 1) + 2 log2(log2(x + 2) + 0.5).

    Args:
        x (int): The integer to code.

    Raises:
        TypeError: x is not an integer.
        ContractViolationError: x is negative.

    Returns:
        float: The code length in bits. Strictly increasing in x.
    '''

    _check_count("x", x, 0)
    return 1.5 + math.log2(x + 1) + 2 * math.log2(math.log2(x + 2) + 0.5)


def _int_code_len_array(x):
    return 1.5 + np.log2(x + 1) + 2 * np.log2(np.log2(x + 2) + 0.5)


def _field_width(value):
    # log2 of a field's largest value; values below 2 give a 0-bit field
    return math.log2(max(value, 1))


def word_inventory_len(lexicon, p):
    '''
    Returns the length of the word inventory column: the type count, every word's phonemes at log2(p) bits
    each, and the fixed-width length fields with their unary width prefix.

    Args:
        lexicon (Lexicon): The lexicon to measure. Must hold at least one type.
        p (int): The number of distinct phonemes in the sample.

    Raises:
        ContractViolationError: The lexicon is empty or p is below 1.

    Returns:
        float: The length in bits.
    '''

    _check_count("p", p, 1)
    _check_count("n", lexicon.n, 1)

    return (
        int_code_len(lexicon.n)
        + math.log2(p) * lexicon.sum_len
        + 1 + (lexicon.n + 1) * _field_width(lexicon.max_len)
    )


def code_word_len(f, m):
    '''
    Returns the length in bits of the code word for a word of frequency f among m tokens: log2(m / f).

    Raises:
        ContractViolationError: f is below 1 or above m.
    '''

    _check_count("f", f, 1)
    _check_count("m", m, 1)
    if f > m:
        raise ContractViolationError("frequency {0} exceeds the token count {1}".format(f, m))

    return math.log2(m / f)


def code_inventory_len(lexicon):
    '''
    Returns the length of the code word inventory column: the code words themselves plus their fixed-width
    length fields and unary width prefix. The field width log2(log2 m) uses log2 m clamped to at least 1.

    Raises:
        ContractViolationError: The lexicon is empty.

    Returns:
        float: The length in bits.
    '''

    _check_count("n", lexicon.n, 1)

    log_m = math.log2(lexicon.m)
    code_words = lexicon.n * log_m - lexicon.sum_logf
    return max(code_words, 0.0) + 1 + (lexicon.n + 1) * _field_width(log_m)


def sample_code_len(lexicon):
    '''
    Returns the length of the encoded sample: the token count m as a self-delimiting integer, then every
    token's code word. The second part is m times the entropy of the token distribution.

    Raises:
        ContractViolationError: The lexicon is empty.

    Returns:
        float: The length in bits.
    '''

    _check_count("m", lexicon.m, 1)

    entropy_bits = lexicon.m * math.log2(lexicon.m) - lexicon.sum_flogf
    return int_code_len(lexicon.m) + max(entropy_bits, 0.0)


@dataclass(frozen=True)
class DLReport(object):
    '''
    The description length of a hypothesis, split into its three parts.

    Attributes:
        word_inventory_bits (float): Length of the word inventory column.
        code_inventory_bits (float): Length of the code word inventory column.
        sample_bits (float): Length of the encoded sample.
    '''
    word_inventory_bits: float
    code_inventory_bits: float
    sample_bits: float

    @property
    def total_bits(self):
        return self.word_inventory_bits + self.code_inventory_bits + self.sample_bits

    def to_dict(self):
        return {
            "word_inventory_bits": self.word_inventory_bits,
            "code_inventory_bits": self.code_inventory_bits,
            "sample_bits": self.sample_bits,
            "total_bits": self.total_bits
        }


def description_length(lexicon, p):
    '''
    Computes the description length of a hypothesis from its lexicon.

    Args:
        lexicon (Lexicon): The hypothesis' lexicon.
        p (int): The number of distinct phonemes in the sample.

    Returns:
        DLReport: The three components and their total.
    '''

    return DLReport(
        word_inventory_bits=word_inventory_len(lexicon, p),
        code_inventory_bits=code_inventory_len(lexicon),
        sample_bits=sample_code_len(lexicon)
    )


def total_dl(corpus, segmentation):
    '''
    Computes the description length of a segmentation of a corpus from scratch.

    Returns:
        DLReport: The three components and their total.
    '''
    return description_length(build_lexicon(corpus, segmentation), corpus.p)


@dataclass(frozen=True)
class LexiconSummary(object):
    '''
    The aggregates of a committed lexicon that candidate evaluation starts from.

    Attributes:
        n, m, sum_len, sum_flogf, sum_logf: As on :class:`Lexicon`.
        levels (tuple(int)): The longest distinct word lengths, longest first, padded with zeros.
        level_counts (tuple(int)): The number of types at each of `levels`.
        log2_p (float): Bits per phoneme.
    '''
    n: int
    m: int
    sum_len: int
    sum_flogf: float
    sum_logf: float
    levels: tuple
    level_counts: tuple
    log2_p: float

    @classmethod
    def from_lexicon(cls, lexicon, p):
        length_counts = lexicon.length_counts
        levels = sorted(length_counts, reverse=True)[:LENGTH_LEVELS]
        counts = [length_counts[level] for level in levels]
        padding = LENGTH_LEVELS - len(levels)
        return cls(
            n=lexicon.n, m=lexicon.m, sum_len=lexicon.sum_len,
            sum_flogf=lexicon.sum_flogf, sum_logf=lexicon.sum_logf,
            levels=tuple(levels) + (0,) * padding,
            level_counts=tuple(counts) + (0,) * padding,
            log2_p=math.log2(p)
        )


def _flogf_array(frequencies):
    safe = np.where(frequencies > 0, frequencies, 1.0)
    return np.where(frequencies > 0, frequencies * np.log2(safe), 0.0)


def _logf_array(frequencies):
    return np.log2(np.where(frequencies > 0, frequencies, 1.0))


class CandidateDeltas(object):
    '''
    Changes to the lexicon aggregates caused by each of N candidates, as parallel arrays.

    Attributes:
        n (numpy.ndarray): Change in the number of types.
        sum_len (numpy.ndarray): Change in the total length of the types.
        sum_flogf (numpy.ndarray): Change in the sum of f * log2(f).
        sum_logf (numpy.ndarray): Change in the sum of log2(f).
        vanished (numpy.ndarray): Shape (N, LENGTH_LEVELS); types removed at each of the summary's levels.
        appeared_max (numpy.ndarray): Length of the longest new type, 0 when none appears.
    '''
    __slots__ = ('n', 'sum_len', 'sum_flogf', 'sum_logf', 'vanished', 'appeared_max')

    def __init__(self, n, sum_len, sum_flogf, sum_logf, vanished, appeared_max):
        self.n = n
        self.sum_len = sum_len
        self.sum_flogf = sum_flogf
        self.sum_logf = sum_logf
        self.vanished = vanished
        self.appeared_max = appeared_max

    def __len__(self):
        return len(self.n)

    def take(self, indices):
        return CandidateDeltas(*(getattr(self, name)[indices] for name in self.__slots__))

    def combined_with(self, other):
        '''
        Returns the deltas of applying two candidates together. Only valid when no word type is touched by
        both, since the aggregates are then additive.
        '''
        return CandidateDeltas(
            self.n + other.n,
            self.sum_len + other.sum_len,
            self.sum_flogf + other.sum_flogf,
            self.sum_logf + other.sum_logf,
            self.vanished + other.vanished,
            np.maximum(self.appeared_max, other.appeared_max)
        )


def candidate_deltas(summary, frequencies, type_lengths, ids, deltas):
    '''
    Computes the aggregate changes of many candidates, each given as a small set of frequency changes against
    a committed lexicon.

    Args:
        summary (LexiconSummary): Aggregates of the committed lexicon.
        frequencies (numpy.ndarray): Committed frequency of every interned type id (0 for unused types).
        type_lengths (numpy.ndarray): Length in phonemes of every interned type id.
        ids (numpy.ndarray): Shape (N, K); the type ids touched by each candidate. A type may appear in
            several columns of a row; unused columns hold a type whose delta is 0.
        deltas (numpy.ndarray): Shape (N, K); the frequency change of each column.

    Returns:
        CandidateDeltas: The changes of every candidate.
    '''

    columns = ids.shape[1]
    group_deltas = deltas.astype(np.int64)
    first = np.ones(ids.shape, dtype=bool)
    for k in range(columns):
        for j in range(k + 1, columns):
            same = ids[:, k] == ids[:, j]
            group_deltas[:, k] += np.where(same, deltas[:, j], 0)
            group_deltas[:, j] += np.where(same, deltas[:, k], 0)
            first[:, j] &= ~same

    old = frequencies[ids]
    new = old + group_deltas
    lengths = type_lengths[ids]

    was_present = old > 0
    is_present = new > 0
    appeared = first & is_present & ~was_present
    vanished = first & was_present & ~is_present

    return CandidateDeltas(
        n=appeared.sum(axis=1) - vanished.sum(axis=1),
        sum_len=(lengths * appeared).sum(axis=1) - (lengths * vanished).sum(axis=1),
        sum_flogf=np.where(first, _flogf_array(new) - _flogf_array(old), 0.0).sum(axis=1),
        sum_logf=np.where(first, _logf_array(new) - _logf_array(old), 0.0).sum(axis=1),
        vanished=np.stack([(vanished & (lengths == level)).sum(axis=1) for level in summary.levels], axis=1),
        appeared_max=(lengths * appeared).max(axis=1)
    )


def candidate_totals_from_deltas(summary, changes, points_added):
    '''
    Returns the total description length of every candidate from its aggregate changes.

    Args:
        summary (LexiconSummary): Aggregates of the committed lexicon.
        changes (CandidateDeltas): The candidates' changes.
        points_added (int or numpy.ndarray): Number of boundaries each candidate adds (its change in m).

    Returns:
        numpy.ndarray: Shape (N,); total description length in bits of each candidate.
    '''

    n = summary.n + changes.n
    m = summary.m + np.asarray(points_added)
    sum_len = summary.sum_len + changes.sum_len
    sum_flogf = summary.sum_flogf + changes.sum_flogf
    sum_logf = summary.sum_logf + changes.sum_logf

    # longest surviving committed length, unless a new type is longer
    max_len = np.zeros(len(changes), dtype=np.int64)
    for index in reversed(range(LENGTH_LEVELS)):
        remaining = summary.level_counts[index] - changes.vanished[:, index]
        max_len = np.where(remaining > 0, summary.levels[index], max_len)
    max_len = np.maximum(max_len, changes.appeared_max)

    log_m = np.log2(m)
    word_inventory = (
        _int_code_len_array(n) + summary.log2_p * sum_len
        + 1 + (n + 1) * np.log2(np.maximum(max_len, 1))
    )
    code_inventory = np.maximum(n * log_m - sum_logf, 0.0) + 1 + (n + 1) * np.log2(np.maximum(log_m, 1.0))
    sample = _int_code_len_array(m) + np.maximum(m * log_m - sum_flogf, 0.0)
    return word_inventory + code_inventory + sample


def candidate_totals(summary, frequencies, type_lengths, ids, deltas, points_added):
    '''
    Evaluates the total description length of many candidate hypotheses at once. No lexicon is rebuilt:
    every aggregate is moved by the contribution of the few changed types, so each candidate costs O(1).

    Takes the arguments of :func:`candidate_deltas` plus `points_added`, the number of boundaries each
    candidate adds.

    Returns:
        numpy.ndarray: Shape (N,); total description length in bits of each candidate.
    '''
    changes = candidate_deltas(summary, frequencies, type_lengths, ids, deltas)
    return candidate_totals_from_deltas(summary, changes, points_added)
