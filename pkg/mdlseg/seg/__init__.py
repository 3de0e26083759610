from .corpus import PhonemeClass, Phoneme, PhonemeInventory, Utterance, Corpus, CorpusStatistics, parse_inventory, \
    parse_corpus, load_inventory, load_corpus, bundled_path, candidate_positions, describe, render
from .hypothesis import Position, Segmentation, Lexicon, build_lexicon, insertion_changes, apply_insertion, \
    encode_sample
from .mdl import DLReport, LexiconSummary, int_code_len, word_inventory_len, code_word_len, code_inventory_len, \
    sample_code_len, description_length, total_dl, CandidateDeltas, candidate_deltas, candidate_totals_from_deltas, \
    candidate_totals
from .phonotactics import ClusterRules, ExtractionReport, ValidPointSet, is_legal_word, is_legal_split, legal_points, \
    initial_valid_points, refresh_after_insertion, extract_rules, parse_rules, load_rules, dump_rules
from .evaluation import Score, boundary_score, type_score, mean_defined
from .search import SearchMode, SearchConfig, SearchStep, SearchTrace, BaselineResult, BruteForceResult, \
    TrialSummary, Verification, greedy_search, random_baseline, run_trials, brute_force, is_admissible, verify
from .report import OutputFormat, score_hypothesis, run_report, trials_report, render_json, render_table, \
    report_table, write_trace_csv, compare, compare_table

__all__ = ('PhonemeClass', 'Phoneme', 'PhonemeInventory', 'Utterance', 'Corpus', 'CorpusStatistics', 'parse_inventory',
           'parse_corpus', 'load_inventory', 'load_corpus', 'bundled_path', 'candidate_positions', 'describe', 'render',
           'Position', 'Segmentation', 'Lexicon', 'build_lexicon', 'insertion_changes', 'apply_insertion',
           'encode_sample', 'DLReport', 'LexiconSummary', 'int_code_len', 'word_inventory_len', 'code_word_len',
           'code_inventory_len', 'sample_code_len', 'description_length', 'total_dl', 'CandidateDeltas',
           'candidate_deltas', 'candidate_totals_from_deltas', 'candidate_totals',
           'ClusterRules', 'ExtractionReport', 'ValidPointSet', 'is_legal_word', 'is_legal_split', 'legal_points',
           'initial_valid_points', 'refresh_after_insertion', 'extract_rules', 'parse_rules', 'load_rules',
           'dump_rules', 'Score', 'boundary_score', 'type_score', 'mean_defined', 'SearchMode', 'SearchConfig',
           'SearchStep', 'SearchTrace', 'BaselineResult', 'BruteForceResult', 'TrialSummary', 'Verification', 'verify',
           'greedy_search', 'random_baseline', 'run_trials', 'brute_force', 'is_admissible', 'OutputFormat',
           'score_hypothesis', 'run_report', 'trials_report', 'render_json', 'render_table', 'report_table',
           'write_trace_csv', 'compare', 'compare_table')
