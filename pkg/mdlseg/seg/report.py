import csv
import json
import logging
from dataclasses import asdict
from enum import Enum
from .corpus import describe, render
from .errors import ContractViolationError
from .evaluation import boundary_score, type_score, mean_defined
from .hypothesis import build_lexicon
from .phonotactics import extract_rules
from .search import SearchConfig, SearchMode, greedy_search, run_trials

logger = logging.getLogger(__name__)

MISSING_VALUE = "n/a"
AVERAGE_TARGET = "average"
TRACE_COLUMNS = ("step", "pointsAdded", "committedDL", "bestDL")
SCORE_HEADERS = ("Boundary recall", "Boundary accuracy", "Type recall", "Type accuracy")


class OutputFormat(Enum):
    '''
    Describes how a report is written.

    Attributes:
        TABLE: A plain text table, percentages rounded to one decimal place.
        JSON: Indented JSON with sorted keys and full precision.
        CSV: The step-by-step trace of a greedy search.
    '''
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


def score_hypothesis(corpus, segmentation):
    '''
    Scores a hypothesis against the corpus' gold segmentation.

    Raises:
        ContractViolationError: The corpus has no gold segmentation.

    Returns:
        tuple(Score, Score): The boundary score and the type score.
    '''

    if corpus.gold is None:
        raise ContractViolationError("scoring needs a corpus with a gold segmentation")
    return (
        boundary_score(segmentation, corpus.gold),
        type_score(build_lexicon(corpus, segmentation), build_lexicon(corpus, corpus.gold))
    )


def run_report(corpus, config, segmentation, dl_report=None, trace=None):
    '''
    Builds the JSON-ready report of a single hypothesis.

    Args:
        corpus (Corpus): The segmented corpus.
        config (dict): The full effective configuration of the run, defaults included.
        segmentation (Segmentation): The reported hypothesis.
        dl_report (DLReport, optional): Its description length.
        trace (SearchTrace, optional): The greedy trace that produced it.

    Returns:
        dict: The report.
    '''

    report = {
        "config": dict(config),
        "corpus": asdict(describe(corpus)),
        "segmentation": render(corpus, segmentation)
    }

    if dl_report is not None:
        report["dl"] = dl_report.to_dict()

    if corpus.gold is not None:
        boundaries, types = score_hypothesis(corpus, segmentation)
        report["boundary"] = boundaries.to_dict()
        report["types"] = types.to_dict()

    if trace is not None:
        report["trace"] = {
            "steps": len(trace.steps) - 1,
            "best_step": trace.best_step,
            "same_word_steps": sum(1 for step in trace.steps if step.same_word),
            "final_dl": trace.steps[-1].committed_dl
        }

    return report


def trials_report(corpus, config, summary):
    '''
    Builds the JSON-ready report of a random baseline averaged over trials.

    Returns:
        dict: The report.
    '''
    return {
        "config": dict(config),
        "corpus": asdict(describe(corpus)),
        "trials": summary.to_dict()
    }


def render_json(report):
    '''
    Serialises a report. Identical reports always give byte-identical text.
    '''
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _cell(value):
    if value is None:
        return MISSING_VALUE
    if isinstance(value, float):
        return "{0:.1f}".format(value)
    return str(value)


def render_table(headers, rows):
    '''
    Lays out rows of values as a plain text table. Floats are rounded to one decimal place and missing values
    are shown as "n/a".

    Args:
        headers (iterable(str)): Column titles.
        rows (iterable(iterable)): One sequence of values per row.

    Returns:
        str: The table, newline-terminated.
    '''

    lines = [[str(header) for header in headers]] + [[_cell(value) for value in row] for row in rows]
    widths = [max(len(line[column]) for line in lines) for column in range(len(lines[0]))]

    text = []
    for index, line in enumerate(lines):
        text.append("  ".join(
            cell.ljust(width) if column == 0 else cell.rjust(width)
            for column, (cell, width) in enumerate(zip(line, widths))
        ).rstrip())
        if index == 0:
            text.append("  ".join("-" * width for width in widths))
    return "\n".join(text) + "\n"


def report_table(report):
    '''
    Renders the headline numbers of a :func:`run_report` or :func:`trials_report` result as a table.
    '''

    rows = []
    if "trials" in report:
        trials = report["trials"]
        rows.append(("Trials", trials["trials"]))
        rows.append(("Points requested", trials["requested"]))
        rows.append(("Mean points placed", trials["mean_placed"]))
        for name in ("boundary", "types"):
            for measure in ("recall", "accuracy"):
                rows.append(("{0} {1} (%)".format(name.capitalize(), measure), trials[name][measure]))
        return render_table(("Measure", "Value"), rows)

    if "dl" in report:
        rows.extend(
            (label, report["dl"][key]) for label, key in (
                ("Word inventory (bits)", "word_inventory_bits"),
                ("Code inventory (bits)", "code_inventory_bits"),
                ("Encoded sample (bits)", "sample_bits"),
                ("Total (bits)", "total_bits")
            )
        )
    for name in ("boundary", "types"):
        if name in report:
            for measure in ("recall", "accuracy"):
                rows.append(("{0} {1} (%)".format(name.capitalize(), measure), report[name][measure]))
    return render_table(("Measure", "Value"), rows)


def write_trace_csv(trace, stream):
    '''
    Writes a greedy trace as CSV with the columns step, pointsAdded, committedDL and bestDL.

    Args:
        trace (SearchTrace): The trace.
        stream (file): A text stream opened with newline="".
    '''

    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TRACE_COLUMNS)
    for step in trace.steps:
        writer.writerow((step.step, len(step.points), repr(step.committed_dl), repr(step.best_dl)))


def compare(labelled_corpora, rules=None, trials=1000, seed=0, threads=1):
    '''
    Runs the four simulations on every corpus and lays out their scores the way a results table split by
    target does: for each simulation, one row per target averaged over that target's corpora, followed by an
    "average" row over the targets when there is more than one.

    Args:
        labelled_corpora (iterable(tuple(str, Corpus))): Target labels (for example "adult" or "child") with
            corpora carrying gold segmentations. Corpora sharing a label are averaged together.
        rules (ClusterRules, optional): Cluster rules for the phonotactic simulations. Without rules, each
            corpus uses the rules extracted from its own gold segmentation.
        trials (int): Trials per random baseline.
        seed (int): Seed of the random baselines.
        threads (int): Worker threads.

    Raises:
        ContractViolationError: No corpus was given.

    Returns:
        list(dict): One entry per simulation and target with the mean boundary and type recall and accuracy.
    '''

    labelled_corpora = list(labelled_corpora)
    if not labelled_corpora:
        raise ContractViolationError("compare needs at least one corpus")

    results = {}
    for index, (target, corpus) in enumerate(labelled_corpora):
        corpus_rules = rules if rules is not None else extract_rules(corpus).rules
        logger.info("Comparing simulations on corpus %d of %d (%s)", index + 1, len(labelled_corpora), target)
        scores = results.setdefault(target, {mode: [] for mode in SearchMode})

        for mode in (SearchMode.DIST_FREE, SearchMode.DIST_PHONO):
            config = SearchConfig(phonotactics=corpus_rules if mode.uses_phonotactics else None, threads=threads)
            segmentation = greedy_search(corpus, config)[0]
            boundaries, types = score_hypothesis(corpus, segmentation)
            scores[mode].append((boundaries.recall, boundaries.accuracy, types.recall, types.accuracy))

        for mode in (SearchMode.RAND_FREE, SearchMode.RAND_PHONO):
            summary = run_trials(corpus, rules=corpus_rules if mode.uses_phonotactics else None, trials=trials,
                                 seed=seed, threads=threads)
            scores[mode].append((summary.boundary_recall, summary.boundary_accuracy, summary.type_recall,
                                 summary.type_accuracy))

    rows = []
    for mode in SearchMode:
        target_means = []
        for target, scores in results.items():
            means = [mean_defined(column)[0] for column in zip(*scores[mode])]
            target_means.append(means)
            rows.append(_compare_row(mode, target, len(scores[mode]), means))
        if len(results) > 1:
            means = [mean_defined(column)[0] for column in zip(*target_means)]
            rows.append(_compare_row(mode, AVERAGE_TARGET, len(labelled_corpora), means))
    return rows


def _compare_row(mode, target, corpora, means):
    return {
        "mode": mode.value,
        "target": target,
        "corpora": corpora,
        "boundary": {"recall": means[0], "accuracy": means[1]},
        "types": {"recall": means[2], "accuracy": means[3]}
    }


def compare_table(rows):
    return render_table(
        ("Simulation", "Target") + SCORE_HEADERS,
        [
            (row["mode"], row["target"], row["boundary"]["recall"], row["boundary"]["accuracy"],
             row["types"]["recall"], row["types"]["accuracy"])
            for row in rows
        ]
    )
