#!/usr/bin/env python3
"""Command-line entry point: scheme comparison, letter entropy and corpus statistics."""
import sys
import argparse
from pathlib import Path
from typing import List, Optional

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from app.config import settings
from core.services.chunking import section_stats
from core.services.corpus import corpus_stats
from core.services.errors import EXIT_OK, ErrorHandler
from core.services.report import FORMATS, AnalysisService, render_report
from core.utils.text_utils import read_text
from core.utils.logger import logger


def _write(output: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(output, encoding="utf-8")
        logger.info(f"Report written to {out}")
    else:
        sys.stdout.write(output)


def run_analyze(args: argparse.Namespace, service: AnalysisService) -> None:
    tagset = service.load_tagset(path=args.tagset)
    rules = service.load_rules(tagset, path=args.rules)
    corpus = service.load_corpus(tagset, path=args.corpus)
    report = service.analyze(
        corpus,
        rules,
        schemes=args.schemes,
        max_n=args.max_n,
        per_sentence_windows=args.per_sentence_windows,
    )
    _write(render_report(report, args.format), args.out)


def run_letters(args: argparse.Namespace, service: AnalysisService) -> None:
    result = service.letters(read_text(args.text), include_space=args.space, max_n=args.max_n)
    alphabet = "27-letter" if args.space else "26-letter"
    lines = [f"{alphabet} alphabet", f"H0 {result.h0:.3f}"]
    lines += [f"H{n} {value:.3f}" for n, value in sorted(result.hn.items())]
    _write("\n".join(lines) + "\n", args.out)


def run_stats(args: argparse.Namespace, service: AnalysisService) -> None:
    tagset = service.load_tagset(path=args.tagset)
    rules = service.load_rules(tagset, path=args.rules)
    corpus = service.load_corpus(tagset, path=args.corpus)
    stats = corpus_stats(corpus)
    sections = section_stats(corpus, rules)
    lines = [
        f"sentences {stats.sentence_count}",
        f"mean length {stats.mean_length:.2f}",
        f"tagset size {stats.tagset_size}",
        f"imperatives {sections.imperative_count}",
        f"excluded {sections.excluded_count}",
        f"subject length {sections.min_subject_length}-{sections.max_subject_length}",
        f"pre-subject length {sections.min_pre_subject_length}-{sections.max_pre_subject_length}",
    ]
    _write("\n".join(lines) + "\n", args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Measure whether hypertag schemes lower the n-gram entropy of tagged text",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Compare all six schemes on the bundled demo corpus
  python hypertag_entropy.py analyze
  
  # Subject scheme only, per-sentence windows, as TSV
  python hypertag_entropy.py analyze --corpus my.txt --schemes p,s --per-sentence-windows --format tsv
  
  # Letter entropy with the space symbol
  python hypertag_entropy.py letters --text book.txt --space
        """
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    
    def add_inputs(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--corpus", type=str, default=None, help="Pre-tagged corpus file (default: bundled demo)")
        sub.add_argument("--tagset", type=str, default=None, help="Tagset definition file (default: bundled demo)")
        sub.add_argument("--rules", type=str, default=None, help="Chunk rules file (default: bundled demo)")
        sub.add_argument("--out", type=str, default=None, help="Write output here instead of stdout")
    
    analyze = subparsers.add_parser("analyze", help="Compare hypertag schemes on a corpus")
    add_inputs(analyze)
    analyze.add_argument(
        "--schemes",
        type=str,
        default=None,
        help=f"Comma-separated scheme suffixes (default: {settings.SCHEMES})"
    )
    analyze.add_argument("--max-n", type=int, default=None, help=f"Highest n-gram order (default: {settings.MAX_N})")
    analyze.add_argument(
        "--format",
        choices=FORMATS,
        default=settings.REPORT_FORMAT,
        help="Report format"
    )
    analyze.add_argument(
        "--per-sentence-windows",
        action="store_true",
        default=None,
        help="Keep n-gram windows inside sentences"
    )
    
    letters = subparsers.add_parser("letters", help="Letter-sequence entropy of a text file")
    letters.add_argument("--text", type=str, required=True, help="Text file")
    letters.add_argument(
        "--space",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Include the word space as a 27th letter"
    )
    letters.add_argument("--max-n", type=int, default=None, help=f"Highest n-gram order (default: {settings.MAX_N})")
    letters.add_argument("--out", type=str, default=None, help="Write output here instead of stdout")
    
    stats = subparsers.add_parser("stats", help="Corpus and sentence-section statistics")
    add_inputs(stats)
    return parser


COMMANDS = {
    "analyze": run_analyze,
    "letters": run_letters,
    "stats": run_stats,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    service = AnalysisService()
    try:
        COMMANDS[args.command](args, service)
    except Exception as e:
        return ErrorHandler.exit_code(e)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
