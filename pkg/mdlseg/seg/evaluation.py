from dataclasses import dataclass
from .errors import ContractViolationError


def _percentage(numerator, denominator):
    if denominator == 0:
        return None
    return 100.0 * numerator / denominator


@dataclass(frozen=True)
class Score(object):
    '''
    Hits, misses and false alarms of a hypothesis against a gold standard.

    Attributes:
        hits (int): Items found in both.
        misses (int): Gold items the hypothesis lacks.
        false_alarms (int): Hypothesis items absent from the gold standard.
    '''
    hits: int
    misses: int
    false_alarms: int

    @property
    def recall(self):
        '''
        float or None: Percentage of gold items found; `None` when there are no gold items.
        '''
        return _percentage(self.hits, self.hits + self.misses)

    @property
    def accuracy(self):
        '''
        float or None: Percentage of hypothesis items that are correct; `None` when the hypothesis is empty.
        '''
        return _percentage(self.hits, self.hits + self.false_alarms)

    def to_dict(self):
        return {
            "hits": self.hits,
            "misses": self.misses,
            "false_alarms": self.false_alarms,
            "recall": self.recall,
            "accuracy": self.accuracy
        }


def _compare(hypothesis, gold):
    hypothesis = set(hypothesis)
    gold = set(gold)
    hits = len(hypothesis & gold)
    return Score(hits=hits, misses=len(gold) - hits, false_alarms=len(hypothesis) - hits)


def boundary_score(hypothesis, gold):
    '''
    Scores the utterance-internal boundaries of a hypothesis against a gold segmentation. Utterance edges are
    given, not found, so they are never counted.

    Args:
        hypothesis (Segmentation): The hypothesis.
        gold (Segmentation): The gold segmentation of the same corpus.

    Raises:
        ContractViolationError: The segmentations describe different corpora.

    Returns:
        Score: The boundary score.
    '''

    if hypothesis.lengths != gold.lengths:
        raise ContractViolationError("hypothesis and gold segment different corpora")
    return _compare(hypothesis.positions(), gold.positions())


def type_score(hypothesis_lexicon, gold_lexicon):
    '''
    Scores the word types of a hypothesis against the gold types. Types match only when identical, and
    frequencies are ignored.

    Returns:
        Score: The type score.
    '''
    return _compare(hypothesis_lexicon.types, gold_lexicon.types)


def mean_defined(values):
    '''
    Averages the defined values of a sequence of optional percentages.

    Returns:
        tuple(float or None, int): The mean of the values that are not `None` (or `None` when there are none),
        and the number of `None` values left out.
    '''

    defined = []
    undefined = 0
    for value in values:
        if value is None:
            undefined += 1
        else:
            defined.append(value)

    if not defined:
        return None, undefined
    return sum(defined) / len(defined), undefined
