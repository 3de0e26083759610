import json
import pytest
from mdlseg.cli import main, RunConfig, _build_parser, _labelled_path, THREADS_VARIABLE
from mdlseg.seg import bundled_path, parse_rules
from mdlseg.seg.errors import UsageError

KITTY = str(bundled_path("kitty.txt"))
RULES = str(bundled_path("english.rules"))


def _config(argv, environ=None):
    return RunConfig.from_arguments(_build_parser().parse_args(argv), environ or {})


def test_threads_come_from_the_environment():
    assert _config(["stats", "--corpus", KITTY]).threads == 1
    assert _config(["stats", "--corpus", KITTY], {THREADS_VARIABLE: "4"}).threads == 4
    assert _config(["stats", "--corpus", KITTY, "--threads", "2"], {THREADS_VARIABLE: "4"}).threads == 2


@pytest.mark.parametrize("argv, environ", [
    (["segment", "--corpus", KITTY, "--mode", "dist-phono"], {}),
    (["baseline", "--corpus", KITTY, "--out", "csv"], {}),
    (["baseline", "--corpus", KITTY, "--trials", "0"], {}),
    (["baseline", "--corpus", KITTY, "--k", "-1"], {}),
    (["stats", "--corpus", KITTY], {THREADS_VARIABLE: "many"}),
    (["stats", "--corpus", KITTY, "--threads", "0"], {}),
    (["segment", "--corpus", KITTY, "--mode", "rand-free"], {}),
])
def test_inconsistent_arguments(argv, environ):
    with pytest.raises(UsageError):
        _config(argv, environ)


def test_report_config_leaves_out_run_details():
    config = _config(["segment", "--corpus", KITTY, "--threads", "3", "--out", "json", "-v"])
    recorded = config.report_config()
    assert not {"threads", "out", "output", "verbosity", "trace"} & set(recorded)
    assert recorded["mode"] == "dist-free"
    assert recorded["corpus"] == [KITTY]
    assert recorded["inventory"] == "<bundled english.inv>"


def test_stats(capsys):
    assert main(["stats", "--corpus", KITTY]) == 0
    output = capsys.readouterr().out
    assert "gold boundaries" in output
    assert "candidate positions" in output


def test_segment_json(tmp_path, capsys):
    assert main(["segment", "--corpus", KITTY, "--out", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["config"]["subcommand"] == "segment"
    assert "threads" not in report["config"]
    assert report["corpus"]["tokens"] == 13
    assert report["dl"]["total_bits"] > 0


def test_segment_is_reproducible(tmp_path, monkeypatch):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    assert main(["segment", "--corpus", KITTY, "--out", "json", "--output", str(first)]) == 0
    monkeypatch.setenv(THREADS_VARIABLE, "3")
    assert main(["segment", "--corpus", KITTY, "--out", "json", "--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_segment_trace(tmp_path, capsys):
    trace = tmp_path / "trace.csv"
    assert main(["segment", "--corpus", KITTY, "--rules", RULES, "--mode", "dist-phono", "--trace", str(trace)]) == 0
    assert trace.read_text(encoding="utf-8").startswith("step,pointsAdded,committedDL,bestDL\n")
    assert "Total (bits)" in capsys.readouterr().out

    assert main(["segment", "--corpus", KITTY, "--out", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[1].startswith("0,0,")


def test_baseline(capsys):
    assert main(["baseline", "--corpus", KITTY, "--trials", "200", "--seed", "1", "--out", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["config"]["k"] == 10
    assert report["trials"]["boundary"]["recall"] == pytest.approx(33.3, abs=6)


def test_brute(tmp_path, capsys):
    corpus = tmp_path / "tiny.txt"
    corpus.write_text("du du\nsi du\n", encoding="utf-8")
    assert main(["brute", "--corpus", str(corpus), "--out", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["brute_force"]["hypotheses"] == 64
    assert report["verdict"] in ("equal", "greedy-suboptimal")


def test_brute_refuses_large_corpus(capsys):
    assert main(["brute", "--corpus", KITTY]) == 3
    assert "Contract violation: Refusing to enumerate 30 candidate points" in capsys.readouterr().err


def test_score(tmp_path, capsys):
    hypothesis = tmp_path / "hypothesis.txt"
    hypothesis.write_text("du ju siðə kɪti\nsi ðə kɪti\ndu ju lYk ðə kɪti\n", encoding="utf-8")
    assert main(["score", "--corpus", KITTY, "--hypothesis", str(hypothesis), "--out", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["boundary"]["hits"] == 9
    assert report["boundary"]["false_alarms"] == 0
    assert report["boundary"]["accuracy"] == 100.0


def test_score_rejects_other_utterances(tmp_path, capsys):
    hypothesis = tmp_path / "hypothesis.txt"
    hypothesis.write_text("du ju\n", encoding="utf-8")
    assert main(["score", "--corpus", KITTY, "--hypothesis", str(hypothesis)]) == 3


def test_extract_rules_output_can_be_loaded(capsys):
    assert main(["extract-rules", "--corpus", KITTY]) == 0
    rules = parse_rules(capsys.readouterr().out)
    assert rules.final_clusters == {"", "k"}


def test_compare(capsys):
    assert main(["compare", "--corpus", KITTY, KITTY, "--trials", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [line.split()[:2] for line in lines[2:]] == [
        ["dist-free", "kitty"], ["dist-phono", "kitty"], ["rand-free", "kitty"], ["rand-phono", "kitty"]
    ]


def test_compare_by_target(capsys):
    argv = ["compare", "--corpus", "child=" + KITTY, "adult=" + KITTY, "--trials", "5", "--out", "json"]
    assert main(argv) == 0
    report = json.loads(capsys.readouterr().out)
    assert [corpus["target"] for corpus in report["corpora"]] == ["child", "adult"]
    assert [row["target"] for row in report["simulations"][:3]] == ["child", "adult", "average"]
    assert len(report["simulations"]) == 12


@pytest.mark.parametrize("argument, expected", [
    ("child=data/child.txt", ("child", "data/child.txt")),
    ("data/child.txt", ("child", "data/child.txt")),
    ("runs/a=b/adult.txt", ("adult", "runs/a=b/adult.txt")),
])
def test_labelled_path(argument, expected):
    assert _labelled_path(argument) == expected


def test_labelled_path_needs_a_path():
    with pytest.raises(UsageError):
        _labelled_path("child=")


@pytest.mark.parametrize("argv, code", [
    (["segment"], 1),
    (["stats", "--corpus", KITTY, "--bogus"], 1),
    (["segment", "--corpus", KITTY, "--mode", "dist-phono"], 1),
    (["stats", "--corpus", "does-not-exist.txt"], 2),
])
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code
    assert capsys.readouterr().err


def test_malformed_corpus_exit_code(tmp_path, capsys):
    corpus = tmp_path / "bad.txt"
    corpus.write_text("du ju\ndu  X\n", encoding="utf-8")
    assert main(["stats", "--corpus", str(corpus)]) == 2
    assert "line 2" in capsys.readouterr().err
