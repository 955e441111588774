"""Command line entry point.

Exit codes: 0 on success, 1 for input errors (unreadable or malformed
data files), 2 for configuration errors (bad flags or parameter values).
"""

from __future__ import annotations

import argparse
import sys

from .corpus import parse_input
from .embeddings import load_vectors
from .errors import ConfigError, InputError, TermscapeError
from .report import build_report, emit, load_external_scores
from .stats import StatsConfig
from .vocab import VocabularyConfig


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="termscape",
        description="Contrast two document categories as an interactive term scatterplot.",
    )
    parser.add_argument("--input", required=True, metavar="FILE", help="labeled corpus file")
    parser.add_argument("--format", required=True, choices=["csv", "jsonl"])
    parser.add_argument("--category-field", required=True, metavar="NAME")
    parser.add_argument("--text-field", required=True, metavar="NAME")
    parser.add_argument(
        "--labels", required=True, metavar="A,B",
        help="comma-separated category pair; the first is plotted on the x axis",
    )
    parser.add_argument("--min-freq", type=int, default=5, metavar="N")
    parser.add_argument("--min-pmi", type=float, default=8.0, metavar="P")
    parser.add_argument("--phi", choices=["token", "doc"], default="token",
                        help="frequency measure used for ranks and thresholds")
    parser.add_argument("--cross-sentence", action="store_true",
                        help="count bigrams across sentence boundaries")
    parser.add_argument("--vectors", metavar="FILE", help="word vectors, text format")
    parser.add_argument("--query", metavar="STR", help="phrase for similarity coloring")
    parser.add_argument("--top-similar", type=int, default=10, metavar="K")
    parser.add_argument("--external-scores", metavar="FILE", help="CSV of term,score")
    parser.add_argument("--emit", choices=["html", "json"], default="html")
    parser.add_argument("--out", required=True, metavar="PATH")
    parser.add_argument("--width", type=float, default=800.0)
    parser.add_argument("--height", type=float, default=600.0)
    return parser


def _split_labels(raw: str) -> tuple[str, str]:
    head, sep, tail = raw.partition(",")
    if not sep or not head or not tail:
        raise ConfigError(f"--labels expects two comma-separated names, got {raw!r}")
    return head, tail


def run(args: argparse.Namespace) -> str:
    labels = _split_labels(args.labels)
    vocab_config = VocabularyConfig(
        min_count=args.min_freq, min_pmi=args.min_pmi, phi_mode=args.phi
    )
    if args.width <= 0 or args.height <= 0:
        raise ConfigError("--width and --height must be positive")
    if args.top_similar < 0:
        raise ConfigError("--top-similar must not be negative")
    if args.query is not None and args.vectors is None:
        raise ConfigError("--query requires --vectors")

    try:
        with open(args.input, encoding="utf-8", newline="") as handle:
            corpus = parse_input(
                handle, args.format, args.category_field, args.text_field, labels
            )
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from exc

    vectors = load_vectors(args.vectors) if args.vectors else None
    external = load_external_scores(args.external_scores) if args.external_scores else None

    payload = build_report(
        corpus,
        vocab_config=vocab_config,
        stats_config=StatsConfig(),
        width=args.width,
        height=args.height,
        vectors=vectors,
        query=args.query,
        top_similar=args.top_similar,
        external_scores=external,
        cross_sentence=args.cross_sentence,
    )
    emit(payload, args.emit, args.out)
    return (
        f"wrote {args.out}: {len(payload['points'])} terms, "
        f"{len(payload['labels'])} labels"
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        print(run(args))
    except InputError as exc:
        print(f"termscape: input error: {exc}", file=sys.stderr)
        return 1
    except ConfigError as exc:
        print(f"termscape: config error: {exc}", file=sys.stderr)
        return 2
    except TermscapeError as exc:  # pragma: no cover - defensive
        print(f"termscape: error: {exc}", file=sys.stderr)
        return 1
    return 0
