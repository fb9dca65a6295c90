"""Tests for the command-line entry point."""
import math

import pytest

from app.config import settings
from core.services.errors import EXIT_CHUNKER_FAILURE, EXIT_INPUT_ERROR, EXIT_OK
from core.services.report import parse_report
from scripts.hypertag_entropy import main

SAMPLE_TEXT = settings.DATA_DIR / "sample_english.txt"


def test_analyze_defaults_to_demo_files(capsys):
    assert main(["analyze"]) == EXIT_OK
    out = capsys.readouterr().out
    for label in ("text-p", "text-a", "text-d", "text-n", "text-s", "text-sn"):
        assert label in out
    assert "100 sentences" in out


def test_analyze_tsv_to_file(tmp_path):
    out = tmp_path / "report.tsv"
    assert main(["analyze", "--schemes", "s", "--max-n", "2", "--format", "tsv", "--out", str(out)]) == EXIT_OK
    report = parse_report(out.read_text(encoding="utf-8"), "tsv")
    assert [row.scheme for row in report.rows] == ["p", "s"]
    assert report.metadata.max_n == 2
    assert report.value("s", 2) < report.value("p", 2)


def test_analyze_per_sentence_windows(tmp_path):
    out = tmp_path / "report.json"
    code = main(["analyze", "--schemes", "n", "--format", "json", "--per-sentence-windows", "--out", str(out)])
    assert code == EXIT_OK
    report = parse_report(out.read_text(encoding="utf-8"), "json")
    assert report.metadata.per_sentence_windows


def test_unknown_tag_is_an_input_error(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("the/DET dog/NOUN barks/VBZ ./STOP\n", encoding="utf-8")
    assert main(["analyze", "--corpus", str(corpus)]) == EXIT_INPUT_ERROR


def test_unknown_scheme_is_an_input_error():
    assert main(["analyze", "--schemes", "p,x"]) == EXIT_INPUT_ERROR


def test_missing_file_is_an_input_error(tmp_path):
    assert main(["analyze", "--corpus", str(tmp_path / "missing.txt")]) == EXIT_INPUT_ERROR


def test_chunker_failing_on_every_sentence(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("the/DET dog/NOUN ./STOP\nold/ADJ dogs/NOUN ./STOP\n", encoding="utf-8")
    assert main(["analyze", "--corpus", str(corpus), "--schemes", "n"]) == EXIT_CHUNKER_FAILURE


def test_plain_scheme_needs_no_chunker(tmp_path, capsys):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("the/DET dog/NOUN ./STOP\nold/ADJ dogs/NOUN ./STOP\n", encoding="utf-8")
    assert main(["analyze", "--corpus", str(corpus), "--schemes", "p"]) == EXIT_OK
    assert "text-p" in capsys.readouterr().out


@pytest.mark.parametrize("flag, alphabet, size", [("--space", "27-letter", 27), ("--no-space", "26-letter", 26)])
def test_letters(capsys, flag, alphabet, size):
    assert main(["letters", "--text", str(SAMPLE_TEXT), flag]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == f"{alphabet} alphabet"
    assert lines[1] == f"H0 {math.log2(size):.3f}"
    values = [float(line.split()[1]) for line in lines[2:]]
    assert len(values) == settings.MAX_N
    assert values == sorted(values, reverse=True)


def test_letters_without_alphabetic_content(tmp_path):
    text = tmp_path / "digits.txt"
    text.write_text("1234 5678 !!\n", encoding="utf-8")
    assert main(["letters", "--text", str(text)]) == EXIT_INPUT_ERROR


def test_stats(capsys):
    assert main(["stats"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines == [
        "sentences 100",
        "mean length 10.50",
        "tagset size 32",
        "imperatives 25",
        "excluded 0",
        "subject length 1-12",
        "pre-subject length 0-15",
    ]
