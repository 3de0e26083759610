import logging
from bisect import bisect_left, insort
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from typing import NamedTuple, Optional
import numpy as np
from .errors import ContractViolationError, LimitExceededError
from .evaluation import boundary_score, type_score, mean_defined
from .hypothesis import Position, build_lexicon, insertion_changes
from .mdl import LexiconSummary, candidate_deltas, candidate_totals, candidate_totals_from_deltas, description_length, \
    total_dl
from .phonotactics import ClusterRules, initial_valid_points, is_legal_split, refresh_after_insertion

logger = logging.getLogger(__name__)

TIE_TOLERANCE = 1e-9
MAX_POINTS_PER_STEP = 2
DEFAULT_TRIALS = 1000
DEFAULT_BRUTE_FORCE_LIMIT = 20
CHUNK_SIZE = 1 << 16

# type id 0 pads candidate rows; its frequency never changes
PADDING_TYPE = 0
SINGLE_DELTAS = np.array([-1, 1, 1, 0, 0, 0], dtype=np.int64)
CROSS_PAIR_DELTAS = np.array([-1, 1, 1, -1, 1, 1], dtype=np.int64)
INNER_PAIR_DELTAS = np.array([-1, 1, 1, 1, 0, 0], dtype=np.int64)


class SearchMode(Enum):
    '''
    Describes the four simulations.

    Attributes:
        DIST_FREE: Greedy description length search without phonotactic constraints.
        DIST_PHONO: Greedy description length search restricted to phonotactically legal boundaries.
        RAND_FREE: Random boundaries anywhere.
        RAND_PHONO: Random boundaries where the phonotactic constraints permit them.
    '''
    DIST_FREE = "dist-free"
    DIST_PHONO = "dist-phono"
    RAND_FREE = "rand-free"
    RAND_PHONO = "rand-phono"

    @property
    def uses_phonotactics(self):
        return self in (SearchMode.DIST_PHONO, SearchMode.RAND_PHONO)

    @property
    def is_random(self):
        return self in (SearchMode.RAND_FREE, SearchMode.RAND_PHONO)


@dataclass(frozen=True)
class SearchConfig(object):
    '''
    Configuration of a search or baseline run.

    Attributes:
        phonotactics (ClusterRules or None): Cluster rules restricting boundaries, or `None` for a free run.
        max_points_per_step (int): Boundaries a greedy step may add. Fixed at 2.
        seed (int): Seed of the random baselines.
        trials (int): Number of baseline trials.
        stop_early (bool): Stop the greedy loop when no candidate improves on the committed hypothesis.
        threads (int): Worker threads for candidate evaluation and trials. Never changes results.
    '''
    phonotactics: Optional[ClusterRules] = None
    max_points_per_step: int = MAX_POINTS_PER_STEP
    seed: int = 0
    trials: int = DEFAULT_TRIALS
    stop_early: bool = False
    threads: int = 1

    def __post_init__(self):
        if self.phonotactics is not None and not isinstance(self.phonotactics, ClusterRules):
            raise TypeError("phonotactics must be ClusterRules or None")
        if self.max_points_per_step != MAX_POINTS_PER_STEP:
            raise ValueError("max_points_per_step is fixed at {0}".format(MAX_POINTS_PER_STEP))
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")


@dataclass(frozen=True)
class SearchStep(object):
    '''
    One step of a greedy search.

    Attributes:
        step (int): Step number; step 0 is the unsegmented start.
        points (tuple(Position)): The boundaries committed in this step.
        committed_dl (float): Description length of the committed hypothesis.
        best_dl (float): Lowest description length seen up to and including this step.
        same_word (bool): Whether a two-point step split a single word twice.
    '''
    step: int
    points: tuple
    committed_dl: float
    best_dl: float
    same_word: bool = False


@dataclass
class SearchTrace(object):
    '''
    The record of a greedy search.

    Attributes:
        steps (list(SearchStep)): One entry per step, starting with the unsegmented hypothesis.
        best_step (int): The step at which the best hypothesis was committed.
        best_segmentation (Segmentation): The shortest hypothesis ever committed.
        best_report (DLReport): Its description length.
    '''
    steps: list = field(default_factory=list)
    best_step: int = 0
    best_segmentation: object = None
    best_report: object = None

    @property
    def committed_dls(self):
        return [step.committed_dl for step in self.steps]

    @property
    def best_dls(self):
        return [step.best_dl for step in self.steps]


class BaselineResult(NamedTuple):
    '''
    The outcome of one random baseline run.

    Attributes:
        segmentation (Segmentation): The random hypothesis.
        requested (int): The number of boundaries asked for.
        placed (int): The number actually placed; fewer than requested when the valid points ran out.
    '''
    segmentation: object
    requested: int
    placed: int


class BruteForceResult(NamedTuple):
    '''
    The global minimum found by exhaustive enumeration.

    Attributes:
        segmentation (Segmentation): The shortest admissible hypothesis.
        report (DLReport): Its description length.
        hypotheses (int): The number of admissible hypotheses evaluated.
    '''
    segmentation: object
    report: object
    hypotheses: int


@dataclass(frozen=True)
class TrialSummary(object):
    '''
    Scores of a random baseline averaged over seeded trials. Undefined ratios are left out of their mean and
    counted in `undefined`.

    Attributes:
        trials (int): Number of trials run.
        requested (int): Boundaries requested per trial.
        mean_placed (float): Mean number of boundaries actually placed.
        short_trials (int): Trials that placed fewer than requested.
        boundary_recall, boundary_accuracy, type_recall, type_accuracy (float or None): Mean percentages,
            `None` when undefined in every trial.
        undefined (dict(str, int)): Number of trials in which each measure was undefined.
    '''
    trials: int
    requested: int
    mean_placed: float
    short_trials: int
    boundary_recall: Optional[float]
    boundary_accuracy: Optional[float]
    type_recall: Optional[float]
    type_accuracy: Optional[float]
    undefined: dict

    def to_dict(self):
        return {
            "trials": self.trials,
            "requested": self.requested,
            "mean_placed": self.mean_placed,
            "short_trials": self.short_trials,
            "boundary": {"recall": self.boundary_recall, "accuracy": self.boundary_accuracy},
            "types": {"recall": self.type_recall, "accuracy": self.type_accuracy},
            "undefined": dict(sorted(self.undefined.items()))
        }


def _point_index(corpus):
    '''
    Returns the candidate positions in (utterance, offset) order and the global index of each utterance's
    offset 1. The global index of (u, o) is base[u] + o - 1.
    '''
    positions = []
    bases = []
    for utterance_index, length in enumerate(corpus.lengths):
        bases.append(len(positions))
        positions.extend(Position(utterance_index, offset) for offset in range(1, length))
    bases.append(len(positions))
    return positions, bases


def _generator(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


class _TypeTable(object):
    '''
    Interns words as integer ids and mirrors their committed frequencies in numpy arrays for vectorised
    candidate evaluation.
    '''

    def __init__(self, capacity=1024):
        self._ids = {}
        self.lengths = np.zeros(capacity, dtype=np.int64)
        self.frequencies = np.zeros(capacity, dtype=np.float64)
        self.frequencies[PADDING_TYPE] = 1.0
        self.size = 1

    def intern(self, word):
        type_id = self._ids.get(word)
        if type_id is not None:
            return type_id

        if self.size == len(self.lengths):
            self.lengths = np.concatenate([self.lengths, np.zeros_like(self.lengths)])
            self.frequencies = np.concatenate([self.frequencies, np.zeros_like(self.frequencies)])

        type_id = self.size
        self._ids[word] = type_id
        self.lengths[type_id] = len(word)
        self.size += 1
        return type_id

    def set_frequency(self, word, frequency):
        self.frequencies[self.intern(word)] = frequency


class _GreedySearch(object):
    '''
    Mutable state of one greedy run. Candidates are evaluated against the committed lexicon without touching
    it; the chosen candidate is committed once per step.
    '''

    def __init__(self, corpus, config):
        self.corpus = corpus
        self.config = config
        self.rules = config.phonotactics
        self.p = corpus.p

        self.positions, self.bases = _point_index(corpus)
        count = len(self.positions)
        self.valid = np.zeros(count, dtype=bool)
        self.token = np.full(count, -1, dtype=np.int64)
        self.whole = np.zeros(count, dtype=np.int64)
        self.left = np.zeros(count, dtype=np.int64)
        self.right = np.zeros(count, dtype=np.int64)

        self.table = _TypeTable()
        self.segmentation = corpus.empty_segmentation()
        self.lexicon = build_lexicon(corpus, self.segmentation)
        for word, frequency in self.lexicon.entries.items():
            self.table.set_frequency(word, frequency)

        self.valid_points = None
        if self.rules is not None:
            self.valid_points = initial_valid_points(corpus, self.segmentation, self.rules)

        self._next_token = 0
        self.inner_pairs = {}
        for utterance_index, length in enumerate(corpus.lengths):
            self._enter_span(utterance_index, 0, length)

    def _global(self, utterance_index, offset):
        return self.bases[utterance_index] + offset - 1

    def _span_offsets(self, utterance_index, start, end):
        if self.rules is None:
            return list(range(start + 1, end))
        offsets = self.valid_points.offsets(utterance_index)
        return offsets[bisect_left(offsets, start + 1):bisect_left(offsets, end)]

    def _enter_span(self, utterance_index, start, end):
        phonemes = self.corpus.utterances[utterance_index].phonemes
        word = phonemes[start:end]
        token = self._next_token
        self._next_token += 1

        whole = self.table.intern(word)
        offsets = self._span_offsets(utterance_index, start, end)
        for offset in offsets:
            index = self._global(utterance_index, offset)
            self.valid[index] = True
            self.token[index] = token
            self.whole[index] = whole
            self.left[index] = self.table.intern(phonemes[start:offset])
            self.right[index] = self.table.intern(phonemes[offset:end])

        first, second, rows = [], [], []
        vowels = self.corpus.inventory.vowels
        for i, cut_a in enumerate(offsets):
            for cut_b in offsets[i + 1:]:
                head = phonemes[start:cut_a]
                middle = phonemes[cut_a:cut_b]
                tail = phonemes[cut_b:end]
                if self.rules is not None and not (
                    is_legal_split(head, middle, self.rules, vowels) and is_legal_split(middle, tail, self.rules, vowels)
                ):
                    continue
                first.append(self._global(utterance_index, cut_a))
                second.append(self._global(utterance_index, cut_b))
                rows.append((whole, self.table.intern(head), self.table.intern(middle), self.table.intern(tail),
                             PADDING_TYPE, PADDING_TYPE))

        if rows:
            self.inner_pairs[(utterance_index, start, end)] = (
                np.array(first, dtype=np.int64), np.array(second, dtype=np.int64), np.array(rows, dtype=np.int64)
            )

    def _leave_span(self, utterance_index, start, end):
        self.valid[self._global(utterance_index, start + 1):self._global(utterance_index, end)] = False
        self.inner_pairs.pop((utterance_index, start, end), None)

    @staticmethod
    def _best_of(totals, points_added, first, second):
        lowest = totals.min()
        hits = np.flatnonzero(totals <= lowest + TIE_TOLERANCE)
        return [(float(totals[h]), points_added, int(first[h]), int(second[h])) for h in hits]

    def _evaluate_cross_pairs(self, summary, remaining, point_ids, point_changes, rows, columns):
        # pairs touching disjoint types combine additively; the rest are evaluated jointly
        apart = self.token[remaining[rows]] != self.token[remaining[columns]]
        rows, columns = rows[apart], columns[apart]
        if len(rows) == 0:
            return []

        first_ids = point_ids[rows]
        second_ids = point_ids[columns]
        shared = np.zeros(len(rows), dtype=bool)
        for a in range(3):
            for b in range(3):
                shared |= first_ids[:, a] == second_ids[:, b]

        totals = np.empty(len(rows), dtype=np.float64)
        disjoint = ~shared
        if disjoint.any():
            combined = point_changes.take(rows[disjoint]).combined_with(point_changes.take(columns[disjoint]))
            totals[disjoint] = candidate_totals_from_deltas(summary, combined, 2)
        if shared.any():
            ids = np.concatenate([first_ids[shared], second_ids[shared]], axis=1)
            totals[shared] = candidate_totals(summary, self.table.frequencies, self.table.lengths, ids,
                                              np.broadcast_to(CROSS_PAIR_DELTAS, ids.shape), 2)

        return self._best_of(totals, 2, remaining[rows], remaining[columns])

    def _evaluate_inner_pairs(self, summary, ids, first, second):
        totals = candidate_totals(summary, self.table.frequencies, self.table.lengths, ids,
                                  np.broadcast_to(INNER_PAIR_DELTAS, ids.shape), 2)
        return self._best_of(totals, 2, first, second)

    def _jobs(self, summary):
        remaining = np.flatnonzero(self.valid)
        if len(remaining) == 0:
            return

        point_ids = np.stack([self.whole[remaining], self.left[remaining], self.right[remaining]], axis=1)
        padding = np.full(point_ids.shape, PADDING_TYPE, dtype=np.int64)
        single_ids = np.concatenate([point_ids, padding], axis=1)
        point_changes = candidate_deltas(summary, self.table.frequencies, self.table.lengths, single_ids,
                                         np.broadcast_to(SINGLE_DELTAS, single_ids.shape))
        singles = candidate_totals_from_deltas(summary, point_changes, 1)
        yield partial(self._best_of, singles, 1, remaining, np.full(len(remaining), -1))

        rows, columns = np.triu_indices(len(remaining), 1)
        for low in range(0, len(rows), CHUNK_SIZE):
            yield partial(self._evaluate_cross_pairs, summary, remaining, point_ids, point_changes,
                          rows[low:low + CHUNK_SIZE], columns[low:low + CHUNK_SIZE])

        if self.inner_pairs:
            tables = [self.inner_pairs[key] for key in sorted(self.inner_pairs)]
            first = np.concatenate([table[0] for table in tables])
            second = np.concatenate([table[1] for table in tables])
            ids = np.concatenate([table[2] for table in tables])
            for low in range(0, len(first), CHUNK_SIZE):
                yield partial(self._evaluate_inner_pairs, summary, ids[low:low + CHUNK_SIZE],
                              first[low:low + CHUNK_SIZE], second[low:low + CHUNK_SIZE])

    def best_candidate(self, executor):
        '''
        Returns (dl, points added, first index, second index) of the step's winner, or `None` when no valid
        point remains. Ties within TIE_TOLERANCE go to fewer points, then to the smallest point indices.
        '''
        summary = LexiconSummary.from_lexicon(self.lexicon, self.p)
        jobs = list(self._jobs(summary))
        if not jobs:
            return None

        if executor is None:
            results = [job() for job in jobs]
        else:
            results = list(executor.map(lambda job: job(), jobs))

        candidates = [candidate for result in results for candidate in result]
        lowest = min(candidate[0] for candidate in candidates)
        return min(
            (candidate for candidate in candidates if candidate[0] <= lowest + TIE_TOLERANCE),
            key=lambda candidate: (candidate[1], candidate[2], candidate[3])
        )

    def commit(self, indices):
        points = [self.positions[index] for index in indices]
        spans = {}
        for point in points:
            start, end = self.segmentation.word_span(point)
            spans.setdefault((point.utterance_index, start, end), []).append(point.offset)

        changes = insertion_changes(self.corpus, self.segmentation, points)
        self.segmentation = self.segmentation.with_points(points)
        self.lexicon.update(changes)
        for word in changes:
            self.table.set_frequency(word, self.lexicon.frequency(word))

        for (utterance_index, start, end), cuts in spans.items():
            if self.rules is not None:
                for cut in cuts:
                    self.valid_points = refresh_after_insertion(
                        self.valid_points, utterance_index, self.corpus.utterances[utterance_index],
                        self.segmentation.offsets(utterance_index), cut, self.rules, self.corpus.inventory
                    )
            self._leave_span(utterance_index, start, end)
            edges = [start] + sorted(cuts) + [end]
            for left, right in zip(edges, edges[1:]):
                self._enter_span(utterance_index, left, right)

        return tuple(points), len(spans) == 1 and len(points) == 2

    def committed_dl(self):
        return description_length(self.lexicon, self.p).total_bits


def greedy_search(corpus, config=None):
    '''
    Runs the greedy description length search. Starting from the unsegmented corpus, every step evaluates all
    hypotheses obtained by adding one valid point or an unordered pair of valid points, and commits the
    shortest one even when it is longer than the current hypothesis. The loop ends when no valid point is
    left (or, with `stop_early`, when no candidate improves), and the shortest hypothesis ever committed is
    returned.

    Args:
        corpus (Corpus): The corpus to segment.
        config (SearchConfig, optional): Defaults to a free search. With `phonotactics` set, only legal
            boundaries are considered (Dist-Phono).

    Returns:
        tuple(Segmentation, DLReport, SearchTrace): The best hypothesis, its description length computed from
        scratch, and the step-by-step trace.
    '''

    config = config or SearchConfig()
    state = _GreedySearch(corpus, config)

    current = state.committed_dl()
    trace = SearchTrace(steps=[SearchStep(0, (), current, current)], best_segmentation=state.segmentation)
    best = current
    logger.info("Greedy search over %d points (%s), unsegmented DL %.3f bits",
                int(state.valid.sum()), "phonotactic" if config.phonotactics else "free", current)

    executor = ThreadPoolExecutor(max_workers=config.threads) if config.threads > 1 else None
    try:
        step = 0
        while True:
            candidate = state.best_candidate(executor)
            if candidate is None:
                break
            if config.stop_early and candidate[0] >= current:
                logger.info("No candidate improves on %.3f bits; stopping at step %d", current, step)
                break

            dl, points_added, first, second = candidate
            points, same_word = state.commit([first] if points_added == 1 else [first, second])
            step += 1
            current = state.committed_dl()
            if current < best - TIE_TOLERANCE:
                best = current
                trace.best_step = step
                trace.best_segmentation = state.segmentation
            trace.steps.append(SearchStep(step, points, current, best, same_word))
            logger.debug("Step %d: added %s, DL %.3f bits (best %.3f)", step, points, current, best)
    finally:
        if executor is not None:
            executor.shutdown()

    trace.best_report = total_dl(corpus, trace.best_segmentation)
    logger.info("Greedy search finished after %d steps; best DL %.3f bits at step %d with %d boundaries",
                step, trace.best_report.total_bits, trace.best_step, trace.best_segmentation.boundary_count)
    return trace.best_segmentation, trace.best_report, trace


def random_baseline(corpus, k=None, rules=None, seed=0):
    '''
    Inserts boundaries one at a time, each drawn uniformly from the currently valid points: every remaining
    point for Rand-Free, the phonotactically legal ones (refreshed after every insertion) for Rand-Phono.

    Args:
        corpus (Corpus): The corpus to segment.
        k (int, optional): Boundaries to place. Defaults to the number of gold boundaries.
        rules (ClusterRules, optional): Cluster rules for Rand-Phono.
        seed (int, numpy.random.SeedSequence or numpy.random.Generator): Source of randomness. Integers and
            seed sequences seed a PCG64 generator.

    Raises:
        ContractViolationError: k is negative, or omitted for a corpus without gold.

    Returns:
        BaselineResult: The hypothesis and how many boundaries were placed.
    '''

    if k is None:
        if corpus.gold is None:
            raise ContractViolationError("k must be given for a corpus without gold segmentation")
        k = corpus.gold.boundary_count
    if k < 0:
        raise ContractViolationError("k must be nonnegative, got {0}".format(k))

    rng = _generator(seed)
    positions, bases = _point_index(corpus)
    offsets = [[] for _ in corpus.utterances]

    if rules is None:
        candidates = list(range(len(positions)))
    else:
        valid_points = initial_valid_points(corpus, corpus.empty_segmentation(), rules)
        candidates = [
            bases[utterance_index] + offset - 1
            for utterance_index in range(len(corpus))
            for offset in valid_points.offsets(utterance_index)
        ]

    placed = 0
    while placed < k and candidates:
        position = positions[candidates.pop(int(rng.integers(len(candidates))))]
        utterance_index = position.utterance_index
        insort(offsets[utterance_index], position.offset)
        placed += 1

        if rules is not None:
            valid_points = refresh_after_insertion(
                valid_points, utterance_index, corpus.utterances[utterance_index], offsets[utterance_index],
                position.offset, rules, corpus.inventory
            )
            low = bisect_left(candidates, bases[utterance_index])
            high = bisect_left(candidates, bases[utterance_index + 1])
            candidates[low:high] = [bases[utterance_index] + offset - 1
                                    for offset in valid_points.offsets(utterance_index)]

    if placed < k:
        logger.debug("Only %d of %d requested boundaries could be placed", placed, k)

    segmentation = corpus.empty_segmentation().with_points(
        Position(utterance_index, offset)
        for utterance_index, utterance_offsets in enumerate(offsets)
        for offset in utterance_offsets
    )
    return BaselineResult(segmentation, k, placed)


def run_trials(corpus, k=None, rules=None, trials=DEFAULT_TRIALS, seed=0, threads=1):
    '''
    Runs a random baseline over many seeded trials and averages its scores against the gold segmentation.

    Trial i draws from child i of `numpy.random.SeedSequence(seed).spawn(trials)`, so results depend only on
    the seed and the trial count, never on `threads`.

    Raises:
        ContractViolationError: The corpus has no gold segmentation or trials is below 1.

    Returns:
        TrialSummary: The averaged scores.
    '''

    if corpus.gold is None:
        raise ContractViolationError("scoring trials needs a corpus with a gold segmentation")
    if trials < 1:
        raise ContractViolationError("trials must be at least 1, got {0}".format(trials))

    gold_lexicon = build_lexicon(corpus, corpus.gold)

    def run_one(child):
        result = random_baseline(corpus, k, rules, child)
        return (
            result,
            boundary_score(result.segmentation, corpus.gold),
            type_score(build_lexicon(corpus, result.segmentation), gold_lexicon)
        )

    children = np.random.SeedSequence(seed).spawn(trials)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            outcomes = list(executor.map(run_one, children))
    else:
        outcomes = [run_one(child) for child in children]

    requested = outcomes[0][0].requested
    boundary_recall, undefined_boundary_recall = mean_defined(outcome[1].recall for outcome in outcomes)
    boundary_accuracy, undefined_boundary_accuracy = mean_defined(outcome[1].accuracy for outcome in outcomes)
    type_recall, undefined_type_recall = mean_defined(outcome[2].recall for outcome in outcomes)
    type_accuracy, undefined_type_accuracy = mean_defined(outcome[2].accuracy for outcome in outcomes)

    summary = TrialSummary(
        trials=trials,
        requested=requested,
        mean_placed=sum(outcome[0].placed for outcome in outcomes) / trials,
        short_trials=sum(1 for outcome in outcomes if outcome[0].placed < requested),
        boundary_recall=boundary_recall,
        boundary_accuracy=boundary_accuracy,
        type_recall=type_recall,
        type_accuracy=type_accuracy,
        undefined={
            "boundary_recall": undefined_boundary_recall,
            "boundary_accuracy": undefined_boundary_accuracy,
            "type_recall": undefined_type_recall,
            "type_accuracy": undefined_type_accuracy
        }
    )
    if summary.short_trials:
        logger.warning("%d of %d trials placed fewer than the %d requested boundaries", summary.short_trials, trials,
                       requested)
    logger.info("%d trials (k=%d, %s): mean boundary recall %s, accuracy %s", trials, requested,
                "phonotactic" if rules else "free", boundary_recall, boundary_accuracy)
    return summary


def is_admissible(corpus, segmentation, rules):
    '''
    Decides whether every boundary of a hypothesis separates two words with vowels and joins a legal final
    cluster to a legal initial cluster. Exactly these hypotheses are reachable by insertions under the rules,
    in any order. Unsegmented utterances are always admissible.
    '''

    vowels = corpus.inventory.vowels
    for utterance_index, utterance in enumerate(corpus.utterances):
        words = [utterance.phonemes[start:end] for start, end in segmentation.spans(utterance_index)]
        if not all(is_legal_split(left, right, rules, vowels) for left, right in zip(words, words[1:])):
            return False
    return True


def brute_force(corpus, rules=None, limit=DEFAULT_BRUTE_FORCE_LIMIT):
    '''
    Finds the global minimum description length hypothesis by enumerating every subset of candidate points.
    With rules, the candidates are the points legal in the unsegmented corpus and only admissible subsets
    are evaluated. Ties are broken as in the greedy search: fewer boundaries, then the lexicographically
    smallest boundary sequence.

    Raises:
        LimitExceededError: There are more candidate points than `limit`.

    Returns:
        BruteForceResult: The minimum, its description length and the number of hypotheses evaluated.
    '''

    empty = corpus.empty_segmentation()
    if rules is None:
        points = _point_index(corpus)[0]
    else:
        valid_points = initial_valid_points(corpus, empty, rules)
        points = [
            Position(utterance_index, offset)
            for utterance_index in range(len(corpus))
            for offset in valid_points.offsets(utterance_index)
        ]

    if len(points) > limit:
        raise LimitExceededError(len(points), limit)

    best = None
    hypotheses = 0
    for mask in range(1 << len(points)):
        chosen = tuple(point for bit, point in enumerate(points) if mask >> bit & 1)
        segmentation = empty.with_points(chosen)
        if rules is not None and not is_admissible(corpus, segmentation, rules):
            continue

        hypotheses += 1
        report = total_dl(corpus, segmentation)
        key = (len(chosen), chosen)
        if (
            best is None
            or report.total_bits < best[0].total_bits - TIE_TOLERANCE
            or (report.total_bits <= best[0].total_bits + TIE_TOLERANCE and key < best[1])
        ):
            best = (report, key, segmentation)

    logger.info("Brute force evaluated %d hypotheses; minimum %.3f bits", hypotheses, best[0].total_bits)
    return BruteForceResult(best[2], best[0], hypotheses)


@dataclass(frozen=True)
class Verification(object):
    '''
    A greedy search checked against the exhaustive minimum of the same corpus.

    Attributes:
        greedy_segmentation (Segmentation): The greedy best-ever hypothesis.
        greedy_report (DLReport): Its description length.
        brute_force (BruteForceResult): The global minimum.
    '''
    greedy_segmentation: object
    greedy_report: object
    brute_force: BruteForceResult

    @property
    def optimal(self):
        return self.greedy_report.total_bits <= self.brute_force.report.total_bits + TIE_TOLERANCE

    @property
    def verdict(self):
        return "equal" if self.optimal else "greedy-suboptimal"


def verify(corpus, rules=None, limit=DEFAULT_BRUTE_FORCE_LIMIT):
    '''
    Runs the greedy search and the brute-force oracle on the same small corpus.

    Raises:
        LimitExceededError: The corpus has more candidate points than `limit`. Checked before any search runs.

    Returns:
        Verification: Both results and the verdict.
    '''

    minimum = brute_force(corpus, rules, limit)
    segmentation, report, _ = greedy_search(corpus, SearchConfig(phonotactics=rules))
    verification = Verification(segmentation, report, minimum)
    logger.info("Greedy %.6f bits, minimum %.6f bits over %d hypotheses: %s", report.total_bits,
                minimum.report.total_bits, minimum.hypotheses, verification.verdict)
    return verification
