import argparse
import io
import logging
import os
import sys
from dataclasses import dataclass, asdict
from pathlib import Path
from typing import Optional
from .segmenter import Segmenter
from .seg import SearchMode, OutputFormat, describe, dump_rules, load_corpus, load_inventory, load_rules, render, \
    render_json, render_table, report_table, run_report, trials_report, write_trace_csv, compare, compare_table
from .seg.errors import SegmentationError, UsageError, ErrorCode, exit_code_for, get_error_message
from .seg.search import DEFAULT_BRUTE_FORCE_LIMIT, DEFAULT_TRIALS

logger = logging.getLogger(__name__)

THREADS_VARIABLE = "MDLSEG_THREADS"
BUNDLED_INVENTORY = "<bundled english.inv>"
LOG_FORMAT = "%(levelname)s: %(name)s: %(message)s"

GREEDY_MODES = [SearchMode.DIST_FREE.value, SearchMode.DIST_PHONO.value]
RANDOM_MODES = [SearchMode.RAND_FREE.value, SearchMode.RAND_PHONO.value]


class _ArgumentParser(argparse.ArgumentParser):
    # exit status 2 belongs to input parse errors
    def error(self, message):
        raise UsageError("{0}: {1}".format(self.prog, message))


@dataclass(frozen=True)
class RunConfig(object):
    '''
    The effective configuration of a command line run. Everything except the output destination, the
    verbosity and the thread count goes into JSON reports.

    Attributes:
        subcommand (str): The subcommand.
        corpus (tuple(str)): The corpus paths.
        inventory (str or None): The inventory path; `None` for the bundled inventory.
        rules (str or None): The cluster rules path.
        mode (str or None): The simulation, for segment and baseline.
        seed (int): Seed of the random baselines.
        trials (int): Trials per random baseline.
        k (int or None): Boundaries per baseline trial; `None` for the gold count.
        limit (int): Candidate point limit of the brute-force check.
        stop_early (bool): Stop the greedy loop when nothing improves.
        hypothesis (str or None): The hypothesis file, for score.
        out (OutputFormat): The report format.
        output (str or None): The report destination; `None` for standard output.
        trace (str or None): Where segment writes its CSV trace besides the report.
        threads (int): Worker threads.
        verbosity (int): Number of -v flags.
    '''
    subcommand: str
    corpus: tuple
    inventory: Optional[str] = None
    rules: Optional[str] = None
    mode: Optional[str] = None
    seed: int = 0
    trials: int = DEFAULT_TRIALS
    k: Optional[int] = None
    limit: int = DEFAULT_BRUTE_FORCE_LIMIT
    stop_early: bool = False
    hypothesis: Optional[str] = None
    out: OutputFormat = OutputFormat.TABLE
    output: Optional[str] = None
    trace: Optional[str] = None
    threads: int = 1
    verbosity: int = 0

    @classmethod
    def from_arguments(cls, arguments, environ=None):
        '''
        Normalises parsed arguments and checks the combinations argparse cannot express.

        Raises:
            UsageError: The arguments are inconsistent.
        '''

        environ = os.environ if environ is None else environ
        threads = arguments.threads
        if threads is None:
            try:
                threads = int(environ.get(THREADS_VARIABLE, "1"))
            except ValueError:
                raise UsageError("{0} must be an integer".format(THREADS_VARIABLE)) from None
        if threads < 1:
            raise UsageError("the thread count must be at least 1")

        corpus = arguments.corpus
        config = cls(
            subcommand=arguments.subcommand,
            corpus=tuple(corpus) if isinstance(corpus, list) else (corpus,),
            inventory=arguments.inventory,
            rules=getattr(arguments, "rules", None),
            mode=getattr(arguments, "mode", None),
            seed=getattr(arguments, "seed", 0),
            trials=getattr(arguments, "trials", DEFAULT_TRIALS),
            k=getattr(arguments, "k", None),
            limit=getattr(arguments, "limit", DEFAULT_BRUTE_FORCE_LIMIT),
            stop_early=getattr(arguments, "stop_early", False),
            hypothesis=getattr(arguments, "hypothesis", None),
            out=OutputFormat(arguments.out),
            output=arguments.output,
            trace=getattr(arguments, "trace", None),
            threads=threads,
            verbosity=arguments.verbose
        )

        if config.mode is not None and SearchMode(config.mode).uses_phonotactics and config.rules is None:
            raise UsageError("mode '{0}' requires --rules".format(config.mode))
        if config.out == OutputFormat.CSV and config.subcommand != "segment":
            raise UsageError("--out csv is only available for segment")
        if config.trials < 1:
            raise UsageError("--trials must be at least 1")
        if config.k is not None and config.k < 0:
            raise UsageError("--k must be nonnegative")
        if config.limit < 0:
            raise UsageError("--limit must be nonnegative")
        return config

    def report_config(self, **resolved):
        '''
        Returns the configuration recorded in JSON reports, with resolved defaults filled in.
        '''

        recorded = asdict(self)
        for name in ("out", "output", "threads", "verbosity", "trace"):
            del recorded[name]
        recorded["corpus"] = list(self.corpus)
        recorded["inventory"] = self.inventory or BUNDLED_INVENTORY
        recorded.update(resolved)
        return recorded


def _build_parser():
    common = _ArgumentParser(add_help=False)
    common.add_argument("--inventory", help="phoneme inventory file (default: the bundled English inventory)")
    common.add_argument("--out", choices=[output.value for output in OutputFormat], default=OutputFormat.TABLE.value,
                        help="report format (default: table)")
    common.add_argument("--output", help="write the report to this file instead of standard output")
    common.add_argument("--threads", type=int, help="worker threads (default: ${0} or 1)".format(THREADS_VARIABLE))
    common.add_argument("-v", "--verbose", action="count", default=0, help="log progress (repeat for more detail)")

    parser = _ArgumentParser(prog="mdlseg", description="Minimum description length word segmentation.")
    subparsers = parser.add_subparsers(dest="subcommand", metavar="subcommand")
    subparsers.required = True

    segment = subparsers.add_parser("segment", parents=[common], help="run a greedy search")
    segment.add_argument("--corpus", required=True)
    segment.add_argument("--rules")
    segment.add_argument("--mode", choices=GREEDY_MODES, default=SearchMode.DIST_FREE.value)
    segment.add_argument("--stop-early", action="store_true", help="stop when no candidate improves")
    segment.add_argument("--trace", help="also write the step trace as CSV to this file")

    baseline = subparsers.add_parser("baseline", parents=[common], help="run a random baseline over trials")
    baseline.add_argument("--corpus", required=True)
    baseline.add_argument("--rules")
    baseline.add_argument("--mode", choices=RANDOM_MODES, default=SearchMode.RAND_FREE.value)
    baseline.add_argument("--k", type=int, help="boundaries per trial (default: the gold boundary count)")
    baseline.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    baseline.add_argument("--seed", type=int, default=0)

    brute = subparsers.add_parser("brute", parents=[common], help="check the greedy search against brute force")
    brute.add_argument("--corpus", required=True)
    brute.add_argument("--rules", help="restrict both searches to these cluster rules")
    brute.add_argument("--limit", type=int, default=DEFAULT_BRUTE_FORCE_LIMIT, help="largest candidate point count")

    score = subparsers.add_parser("score", parents=[common], help="score a segmented file against the gold")
    score.add_argument("--corpus", required=True, help="the gold corpus")
    score.add_argument("--hypothesis", required=True, help="the same utterances, segmented")

    extract = subparsers.add_parser("extract-rules", parents=[common], help="extract cluster rules from the gold")
    extract.add_argument("--corpus", required=True)

    stats = subparsers.add_parser("stats", parents=[common], help="describe a corpus")
    stats.add_argument("--corpus", required=True)

    comparison = subparsers.add_parser("compare", parents=[common], help="run the four simulations")
    comparison.add_argument("--corpus", required=True, nargs="+", metavar="[TARGET=]PATH",
                            help="corpora, optionally labelled with their target (default label: the file name)")
    comparison.add_argument("--rules", help="cluster rules (default: extracted from each corpus)")
    comparison.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    comparison.add_argument("--seed", type=int, default=0)

    return parser


def _segment(config):
    segmenter = Segmenter(config.corpus[0], config.inventory, config.rules)
    segmentation, dl_report, trace = segmenter.segment(SearchMode(config.mode), config.stop_early, config.threads)

    if config.trace is not None:
        with open(config.trace, "w", encoding="utf-8", newline="") as stream:
            write_trace_csv(trace, stream)

    if config.out == OutputFormat.CSV:
        stream = io.StringIO()
        write_trace_csv(trace, stream)
        return stream.getvalue()

    report = run_report(segmenter.corpus, config.report_config(), segmentation, dl_report, trace)
    if config.out == OutputFormat.JSON:
        return render_json(report)
    return report["segmentation"] + "\n" + report_table(report)


def _baseline(config):
    segmenter = Segmenter(config.corpus[0], config.inventory, config.rules)
    summary = segmenter.baseline(SearchMode(config.mode), config.k, config.trials, config.seed, config.threads)
    report = trials_report(segmenter.corpus, config.report_config(k=summary.requested), summary)
    if config.out == OutputFormat.JSON:
        return render_json(report)
    return report_table(report)


def _brute(config):
    segmenter = Segmenter(config.corpus[0], config.inventory, config.rules)
    verification = segmenter.verify(config.limit, phonotactic=config.rules is not None)
    corpus = segmenter.corpus
    minimum = verification.brute_force

    if config.out == OutputFormat.JSON:
        return render_json({
            "config": config.report_config(),
            "greedy": {
                "dl": verification.greedy_report.to_dict(),
                "segmentation": render(corpus, verification.greedy_segmentation)
            },
            "brute_force": {
                "dl": minimum.report.to_dict(),
                "segmentation": render(corpus, minimum.segmentation),
                "hypotheses": minimum.hypotheses
            },
            "verdict": verification.verdict
        })

    return render_table(("Search", "DL (bits)", "Segmentation"), [
        ("greedy", verification.greedy_report.total_bits,
         " | ".join(render(corpus, verification.greedy_segmentation).splitlines())),
        ("brute force", minimum.report.total_bits, " | ".join(render(corpus, minimum.segmentation).splitlines()))
    ]) + "{0} hypotheses enumerated; verdict: {1}\n".format(minimum.hypotheses, verification.verdict)


def _score(config):
    segmenter = Segmenter(config.corpus[0], config.inventory)
    boundaries, types = segmenter.score(config.hypothesis)
    report = {"config": config.report_config(), "boundary": boundaries.to_dict(), "types": types.to_dict()}
    if config.out == OutputFormat.JSON:
        return render_json(report)
    return report_table(report)


def _extract_rules(config):
    extraction = Segmenter(config.corpus[0], config.inventory).extract_rules()
    if config.out == OutputFormat.JSON:
        return render_json({
            "config": config.report_config(),
            "initial": sorted(extraction.rules.initial_clusters, key=lambda cluster: (len(cluster), cluster)),
            "final": sorted(extraction.rules.final_clusters, key=lambda cluster: (len(cluster), cluster)),
            "vowelless_words": list(extraction.vowelless_words)
        })
    return "# extracted from {0}\n".format(config.corpus[0]) + dump_rules(extraction.rules)


def _stats(config):
    statistics = asdict(Segmenter(config.corpus[0], config.inventory).describe())
    if config.out == OutputFormat.JSON:
        return render_json({"config": config.report_config(), "corpus": statistics})
    return render_table(("Measure", "Value"), [(name.replace("_", " "), value) for name, value in statistics.items()])


def _labelled_path(argument):
    target, separator, path = argument.partition("=")
    if not separator or not target or "/" in target or "\\" in target:
        return Path(argument).stem, argument
    if not path:
        raise UsageError("corpus '{0}' has a target but no path".format(argument))
    return target, path


def _compare(config):
    inventory = load_inventory(config.inventory)
    labelled_paths = [_labelled_path(argument) for argument in config.corpus]
    corpora = [(target, load_corpus(path, inventory)) for target, path in labelled_paths]
    rules = load_rules(config.rules, inventory) if config.rules is not None else None
    rows = compare(corpora, rules, config.trials, config.seed, config.threads)
    if config.out == OutputFormat.JSON:
        return render_json({
            "config": config.report_config(),
            "corpora": [dict(asdict(describe(corpus)), target=target) for target, corpus in corpora],
            "simulations": rows
        })
    return compare_table(rows)


COMMANDS = {
    "segment": _segment,
    "baseline": _baseline,
    "brute": _brute,
    "score": _score,
    "extract-rules": _extract_rules,
    "stats": _stats,
    "compare": _compare
}


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT)


def run(config):
    '''
    Executes a configured run and writes its report.

    Returns:
        ErrorCode: SUCCESS.
    '''

    text = COMMANDS[config.subcommand](config)
    if config.output is not None:
        Path(config.output).write_text(text, encoding="utf-8")
        logger.info("Wrote report to %s", config.output)
    else:
        sys.stdout.write(text)
    return ErrorCode.SUCCESS


def main(argv=None):
    '''
    Command line entry point.

    Returns:
        int: The exit status: 0 on success, 1 for usage errors, 2 for unreadable input, 3 for contract
        violations.
    '''

    try:
        arguments = _build_parser().parse_args(argv)
        config = RunConfig.from_arguments(arguments)
        _configure_logging(config.verbosity)
        return run(config).value
    except (SegmentationError, OSError, UnicodeDecodeError, ValueError) as err:
        error_code = exit_code_for(err)
        sys.stderr.write(get_error_message(error_code, str(err)) + "\n")
        return error_code.value


if __name__ == "__main__":
    sys.exit(main())
