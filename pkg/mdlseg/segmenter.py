import logging
from .seg import SearchConfig, SearchMode, load_inventory, load_corpus, load_rules, extract_rules, describe, \
    greedy_search, run_trials, verify, score_hypothesis
from .seg.errors import ContractViolationError, UsageError
from .seg.search import DEFAULT_BRUTE_FORCE_LIMIT, DEFAULT_TRIALS

logger = logging.getLogger(__name__)


class Segmenter(object):
    '''
    Provides the simulations, scoring and rule extraction for one corpus file.

    Inputs are read lazily by :meth:`initialize`, which every operation calls first.

    Attributes:
        corpus (Corpus): The corpus, with its gold segmentation.
        inventory (PhonemeInventory): The phoneme inventory the corpus was validated against.
        rules (ClusterRules or None): The cluster rules, when a rules file was given.

    Args:
        corpus_path (str): The word-spaced corpus file.
        inventory_path (str, optional): The inventory file. Defaults to the bundled English inventory.
        rules_path (str, optional): The cluster rules file used by the phonotactic simulations.
    '''
    __initialized = False

    def __init__(self, corpus_path, inventory_path=None, rules_path=None):
        if corpus_path is None:
            raise TypeError("corpus_path must be a path")

        self.corpus_path = corpus_path
        self.inventory_path = inventory_path
        self.rules_path = rules_path
        self.corpus = None
        self.inventory = None
        self.rules = None

    def initialize(self):
        '''
        Loads the inventory, the corpus and, if configured, the cluster rules.

        Raises:
            ParseError: An input file is malformed.
            OSError: An input file could not be read.
        '''
        if self.__initialized:
            return

        self.inventory = load_inventory(self.inventory_path)
        self.corpus = load_corpus(self.corpus_path, self.inventory)
        if self.rules_path is not None:
            self.rules = load_rules(self.rules_path, self.inventory)

        logger.debug("Segmenter ready for %s (%d utterances, p=%d)", self.corpus_path, len(self.corpus), self.corpus.p)
        self.__initialized = True

    def _rules_for(self, mode):
        if not mode.uses_phonotactics:
            return None
        if self.rules is None:
            raise UsageError("mode '{0}' requires a rules file".format(mode.value))
        return self.rules

    def segment(self, mode=SearchMode.DIST_FREE, stop_early=False, threads=1):
        '''
        Runs a greedy description length search.

        Args:
            mode (SearchMode): DIST_FREE or DIST_PHONO.
            stop_early (bool): Stop when no candidate improves on the committed hypothesis.
            threads (int): Worker threads for candidate evaluation.

        Raises:
            TypeError: mode is not a SearchMode.
            ValueError: mode is a random baseline.
            UsageError: DIST_PHONO was requested without rules.

        Returns:
            tuple(Segmentation, DLReport, SearchTrace): The best hypothesis, its description length and the trace.
        '''

        if not isinstance(mode, SearchMode):
            raise TypeError("mode must be a SearchMode")
        if mode.is_random:
            raise ValueError("mode must be a greedy search mode")

        self.initialize()
        config = SearchConfig(phonotactics=self._rules_for(mode), stop_early=stop_early, threads=threads)
        return greedy_search(self.corpus, config)

    def baseline(self, mode=SearchMode.RAND_FREE, k=None, trials=DEFAULT_TRIALS, seed=0, threads=1):
        '''
        Runs a random baseline over seeded trials and scores it against the gold segmentation.

        Args:
            mode (SearchMode): RAND_FREE or RAND_PHONO.
            k (int, optional): Boundaries per trial. Defaults to the gold boundary count.
            trials (int): Number of trials.
            seed (int): Seed from which the per-trial streams are derived.
            threads (int): Worker threads.

        Raises:
            TypeError: mode is not a SearchMode.
            ValueError: mode is a greedy search.
            UsageError: RAND_PHONO was requested without rules.

        Returns:
            TrialSummary: The averaged scores.
        '''

        if not isinstance(mode, SearchMode):
            raise TypeError("mode must be a SearchMode")
        if not mode.is_random:
            raise ValueError("mode must be a random baseline mode")

        self.initialize()
        return run_trials(self.corpus, k, self._rules_for(mode), trials, seed, threads)

    def verify(self, limit=DEFAULT_BRUTE_FORCE_LIMIT, phonotactic=False):
        '''
        Compares the greedy search with the exhaustive minimum.

        Raises:
            LimitExceededError: The corpus has more candidate points than `limit`.
            UsageError: A phonotactic check was requested without rules.

        Returns:
            Verification: Both results and the verdict.
        '''

        self.initialize()
        return verify(self.corpus, self._rules_for(SearchMode.DIST_PHONO) if phonotactic else None, limit)

    def score(self, hypothesis_path):
        '''
        Scores a word-spaced hypothesis file against the gold segmentation of the corpus.

        Raises:
            ParseError: The hypothesis file is malformed.
            ContractViolationError: The hypothesis does not segment the same utterances.

        Returns:
            tuple(Score, Score): The boundary score and the type score.
        '''

        self.initialize()
        hypothesis = load_corpus(hypothesis_path, self.inventory)
        if hypothesis.utterances != self.corpus.utterances:
            raise ContractViolationError("{0} does not segment the utterances of {1}".format(
                hypothesis_path, self.corpus_path))

        return score_hypothesis(self.corpus, hypothesis.gold)

    def extract_rules(self):
        '''
        Extracts cluster rules from the gold segmentation of the corpus.

        Returns:
            ExtractionReport: The rules and any vowelless gold words.
        '''
        self.initialize()
        return extract_rules(self.corpus)

    def describe(self):
        self.initialize()
        return describe(self.corpus)
