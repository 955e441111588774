"""Report assembly: excerpts, chart payload, and JSON/HTML emission.

The payload is the single wire format between the engine and the viewer:
everything the chart displays (coordinates, scores, labels, term lists,
excerpts, statistics) is precomputed here and serialized canonically, so
two runs over the same input produce byte-identical files.
"""

from __future__ import annotations

import csv
import html
import json
from dataclasses import asdict
from importlib import resources
from pathlib import Path

from .corpus import Corpus, Term, count_terms, sentence_spans, word_spans
from .embeddings import VectorTable, similar_category_terms
from .errors import ConfigError, InputError
from .labeler import FontMetrics, LabelPoint, PlacedLabel, place_labels
from .layout import (
    RDYLBU_11,
    SIMILARITY_STOPS,
    ZERO_SCORE_COLOR,
    TermPoint,
    layout_points,
    pixel_position,
)
from .labeler import SLOT_ORDER
from .stats import StatsConfig, associated_terms, compute_stats
from .vocab import PMI_LOG_BASE, Vocabulary, VocabularyConfig, build_vocabulary

SCHEMA_VERSION = "termscape-payload/1"

TOP_TERMS = 20


def excerpt_index(
    corpus: Corpus,
    vocab: Vocabulary,
    max_per_term: int = 10,
    window: int = 150,
) -> dict[str, list[dict[str, str]]]:
    """Keyword-in-context snippets: first occurrences in document order.

    Each term collects up to max_per_term snippets per category. A snippet
    is the sentence containing the occurrence, truncated to the window size
    centered on the match.
    """
    unigrams = {e.term[0] for e in vocab.entries if len(e.term) == 1}
    bigrams = {e.term for e in vocab.entries if len(e.term) == 2}
    excerpts: dict[str, list[dict[str, str]]] = {e.text: [] for e in vocab.entries}
    quota: dict[tuple[Term, int], int] = {}

    for doc in corpus.documents:
        k = corpus.category_index(doc.category)
        for s_start, s_end in sentence_spans(doc.text):
            words = word_spans(doc.text, s_start, s_end)
            for i, (word, w_start, w_end) in enumerate(words):
                if word in unigrams:
                    _add_excerpt(
                        excerpts, quota, doc, k, (word,), doc.text, s_start, s_end,
                        w_start, w_end, max_per_term, window,
                    )
                if i + 1 < len(words):
                    pair = (word, words[i + 1][0])
                    if pair in bigrams:
                        _add_excerpt(
                            excerpts, quota, doc, k, pair, doc.text, s_start, s_end,
                            w_start, words[i + 1][2], max_per_term, window,
                        )
    return excerpts


def _add_excerpt(excerpts, quota, doc, k, term, text, s_start, s_end,
                 m_start, m_end, max_per_term, window):
    used = quota.get((term, k), 0)
    if used >= max_per_term:
        return
    quota[(term, k)] = used + 1
    sentence = text[s_start:s_end]
    if len(sentence) > window:
        center = (m_start + m_end) // 2 - s_start
        low = min(max(center - window // 2, 0), len(sentence) - window)
        sentence = sentence[low : low + window]
    excerpts[" ".join(term)].append(
        {"doc": doc.id, "category": doc.category, "text": sentence.strip()}
    )


def load_external_scores(path) -> dict[str, float]:
    """Read a term,score CSV; first occurrence of a term wins."""
    scores: dict[str, float] = {}
    try:
        with open(path, encoding="utf-8", newline="") as handle:
            for line_no, row in enumerate(csv.reader(handle), start=1):
                if not row:
                    continue
                if len(row) != 2:
                    raise InputError(f"line {line_no}: expected term,score")
                term, raw = row
                try:
                    value = float(raw)
                except ValueError:
                    if line_no == 1:
                        continue  # header row
                    raise InputError(f"line {line_no}: unparsable score {raw!r}") from None
                scores.setdefault(term, value)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return scores


def build_report(
    corpus: Corpus,
    *,
    vocab_config: VocabularyConfig | None = None,
    stats_config: StatsConfig | None = None,
    metrics: FontMetrics | None = None,
    width: float = 800.0,
    height: float = 600.0,
    vectors: VectorTable | None = None,
    query: str | None = None,
    top_similar: int = 10,
    external_scores: dict[str, float] | None = None,
    cross_sentence: bool = False,
    excerpts_per_term: int = 10,
    excerpt_window: int = 150,
) -> dict:
    """Run the whole pipeline over a parsed corpus and return the payload."""
    vocab_config = vocab_config or VocabularyConfig()
    stats_config = stats_config or StatsConfig()
    metrics = metrics or FontMetrics()
    if query is not None and vectors is None:
        raise ConfigError("a query requires --vectors")

    counts = count_terms(corpus, cross_sentence=cross_sentence)
    vocab = build_vocabulary(counts, vocab_config)
    points = layout_points(vocab)

    stats = compute_stats(vocab, stats_config)
    for point in points:
        entry = stats[point.term]
        point.z = entry.z
        point.p = entry.p

    similarity = None
    if query is not None:
        similarity = similar_category_terms(
            query, vocab, associated_terms(stats, stats_config), vectors, k=top_similar
        )
        for point in points:
            point.similarity = similarity.similarities.get(point.term)

    if external_scores:
        for point in points:
            point.external_score = external_scores.get(point.text)

    anchors = []
    for point in points:
        px, py = pixel_position(point.x_a, point.x_b, width, height)
        anchors.append(LabelPoint(point.text, px, py, max(point.assoc_a, point.assoc_b)))
    labels = place_labels(anchors, metrics, width, height)

    excerpts = excerpt_index(corpus, vocab, excerpts_per_term, excerpt_window)

    return build_payload(
        corpus=corpus,
        vocab=vocab,
        points=points,
        labels=labels,
        metrics=metrics,
        width=width,
        height=height,
        stats_config=stats_config,
        query=query,
        similar=similarity,
        excerpts=excerpts,
        word_counts=tuple(counts.token_totals[1]),
        bigram_counts=tuple(counts.token_totals[2]),
    )


def build_payload(
    *,
    corpus: Corpus,
    vocab: Vocabulary,
    points: list[TermPoint],
    labels: list[PlacedLabel],
    metrics: FontMetrics,
    width: float,
    height: float,
    stats_config: StatsConfig,
    query: str | None,
    similar,
    excerpts: dict[str, list[dict[str, str]]],
    word_counts: tuple[int, int],
    bigram_counts: tuple[int, int],
) -> dict:
    """Assemble the versioned payload dict; asserts internal consistency."""
    assert len(points) == len(vocab), "every vocabulary term must appear exactly once"
    point_texts = {p.text for p in points}
    for label in labels:
        assert label.text in point_texts, f"label {label.text!r} has no point"

    cfg = vocab.config
    a, b = corpus.labels
    metadata = {
        "categories": [a, b],
        "min_count": cfg.min_count,
        "min_pmi": cfg.min_pmi,
        "phi_mode": cfg.phi_mode,
        "pmi_log_base": PMI_LOG_BASE,
        "alpha": stats_config.alpha,
        "significance_level": stats_config.significance_level,
        "chart": {"width": width, "height": height},
        "font_metrics": asdict(metrics),
        "slot_order": list(SLOT_ORDER),
        "color_stops": list(RDYLBU_11),
        "similarity_color_stops": list(SIMILARITY_STOPS),
        "zero_score_color": ZERO_SCORE_COLOR,
        "document_counts": [corpus.size(a), corpus.size(b)],
        "word_counts": list(word_counts),
        "bigram_counts": list(bigram_counts),
        "skipped_documents": corpus.skipped,
    }
    if query is not None:
        metadata["query"] = query

    payload = {
        "schema": SCHEMA_VERSION,
        "metadata": metadata,
        "points": [_point_record(p) for p in points],
        "labels": [
            {
                "term": label.text,
                "slot": label.slot,
                "x_min": label.rect.x_min,
                "y_min": label.rect.y_min,
                "x_max": label.rect.x_max,
                "y_max": label.rect.y_max,
            }
            for label in labels
        ],
        "top_terms": {
            a: [p.text for p in sorted(points, key=lambda p: (-p.assoc_a, p.text))[:TOP_TERMS]],
            b: [p.text for p in sorted(points, key=lambda p: (-p.assoc_b, p.text))[:TOP_TERMS]],
        },
        "excerpts": excerpts,
    }
    if similar is not None:
        payload["similar_terms"] = {
            a: [[text, value] for text, value in similar.ranked[0]],
            b: [[text, value] for text, value in similar.ranked[1]],
        }
    return payload


def _point_record(point: TermPoint) -> dict:
    record = {
        "term": point.text,
        "x_a": point.x_a,
        "x_b": point.x_b,
        "s_a": point.s_a,
        "s_b": point.s_b,
        "assoc_a": point.assoc_a,
        "assoc_b": point.assoc_b,
        "color": point.color,
        "freq_a": point.freq_a,
        "freq_b": point.freq_b,
        "doc_freq_a": point.doc_freq_a,
        "doc_freq_b": point.doc_freq_b,
        "z": point.z,
        "p": point.p,
    }
    if point.similarity is not None:
        record["similarity"] = point.similarity
    if point.external_score is not None:
        record["external_score"] = point.external_score
    return record


def payload_json(payload: dict) -> bytes:
    """Canonical serialization: UTF-8, sorted keys, shortest-round-trip floats."""
    return json.dumps(
        payload, ensure_ascii=False, sort_keys=True, separators=(",", ":"), allow_nan=False
    ).encode("utf-8")


def render_html(payload: dict) -> str:
    """One self-contained HTML file: inlined viewer, payload as a JSON block."""
    template = _viewer_asset("template.html")
    viewer_js = _viewer_asset("viewer.js")
    a, b = payload["metadata"]["categories"]
    title = html.escape(f"termscape: {a} vs {b}")
    # "</" must not appear inside an inline script block; the escaped form
    # parses to identical JSON.
    data = payload_json(payload).decode("utf-8").replace("</", "<\\/")
    page = template.replace("/*__TERMSCAPE_VIEWER_JS__*/", viewer_js)
    page = page.replace("__TERMSCAPE_TITLE__", title)
    return page.replace("__TERMSCAPE_PAYLOAD__", data)


def _viewer_asset(name: str) -> str:
    return resources.files("termscape._viewer").joinpath(name).read_text(encoding="utf-8")


def emit(payload: dict, mode: str, out_path) -> Path:
    """Write the payload as canonical JSON or a self-contained HTML report."""
    path = Path(out_path)
    try:
        if mode == "json":
            path.write_bytes(payload_json(payload))
        elif mode == "html":
            path.write_text(render_html(payload), encoding="utf-8")
        else:
            raise ConfigError(f"unknown emit mode {mode!r}")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc
    return path


PAYLOAD_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "metadata", "points", "labels", "top_terms", "excerpts"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "metadata": {
            "type": "object",
            "required": [
                "categories", "min_count", "min_pmi", "phi_mode", "pmi_log_base",
                "alpha", "significance_level", "chart", "font_metrics", "slot_order",
                "color_stops", "similarity_color_stops", "zero_score_color",
                "document_counts", "word_counts", "bigram_counts", "skipped_documents",
            ],
            "properties": {
                "categories": {
                    "type": "array",
                    "items": {"type": "string"},
                    "minItems": 2,
                    "maxItems": 2,
                },
                "min_count": {"type": "integer", "minimum": 1},
                "min_pmi": {"type": "number"},
                "phi_mode": {"enum": ["token", "doc"]},
                "pmi_log_base": {"type": "number"},
                "alpha": {"type": "number", "exclusiveMinimum": 0},
                "significance_level": {"type": "number"},
                "chart": {
                    "type": "object",
                    "required": ["width", "height"],
                    "properties": {
                        "width": {"type": "number", "exclusiveMinimum": 0},
                        "height": {"type": "number", "exclusiveMinimum": 0},
                    },
                },
                "font_metrics": {
                    "type": "object",
                    "required": ["glyph_width", "line_height", "point_radius", "label_offset"],
                },
                "slot_order": {"type": "array", "items": {"type": "string"}},
                "color_stops": {"type": "array", "items": {"type": "string"}, "minItems": 2},
                "similarity_color_stops": {"type": "array", "items": {"type": "string"}},
                "zero_score_color": {"type": "string"},
                "document_counts": {"type": "array", "items": {"type": "integer"}},
                "word_counts": {"type": "array", "items": {"type": "integer"}},
                "bigram_counts": {"type": "array", "items": {"type": "integer"}},
                "skipped_documents": {"type": "integer", "minimum": 0},
                "query": {"type": "string"},
            },
        },
        "points": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "term", "x_a", "x_b", "s_a", "s_b", "assoc_a", "assoc_b", "color",
                    "freq_a", "freq_b", "doc_freq_a", "doc_freq_b", "z", "p",
                ],
                "additionalProperties": False,
                "properties": {
                    "term": {"type": "string", "minLength": 1},
                    "x_a": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
                    "x_b": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
                    "s_a": {"type": "number", "minimum": 0},
                    "s_b": {"type": "number", "minimum": 0},
                    "assoc_a": {"type": "number", "minimum": 0, "maximum": 1},
                    "assoc_b": {"type": "number", "minimum": 0, "maximum": 1},
                    "color": {"type": "number", "minimum": -1, "maximum": 1},
                    "freq_a": {"type": "integer", "minimum": 0},
                    "freq_b": {"type": "integer", "minimum": 0},
                    "doc_freq_a": {"type": "integer", "minimum": 0},
                    "doc_freq_b": {"type": "integer", "minimum": 0},
                    "z": {"type": "number"},
                    "p": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
                    "similarity": {"type": "number", "minimum": -1, "maximum": 1},
                    "external_score": {"type": "number"},
                },
            },
        },
        "labels": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["term", "slot", "x_min", "y_min", "x_max", "y_max"],
                "additionalProperties": False,
                "properties": {
                    "term": {"type": "string"},
                    "slot": {"enum": list(SLOT_ORDER)},
                    "x_min": {"type": "number"},
                    "y_min": {"type": "number"},
                    "x_max": {"type": "number"},
                    "y_max": {"type": "number"},
                },
            },
        },
        "top_terms": {
            "type": "object",
            "minProperties": 2,
            "maxProperties": 2,
            "additionalProperties": {"type": "array", "items": {"type": "string"}},
        },
        "similar_terms": {
            "type": "object",
            "minProperties": 2,
            "maxProperties": 2,
            "additionalProperties": {
                "type": "array",
                "items": {
                    "type": "array",
                    "prefixItems": [{"type": "string"}, {"type": "number"}],
                    "minItems": 2,
                    "maxItems": 2,
                },
            },
        },
        "excerpts": {
            "type": "object",
            "additionalProperties": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["doc", "category", "text"],
                    "properties": {
                        "doc": {"type": "string"},
                        "category": {"type": "string"},
                        "text": {"type": "string"},
                    },
                },
            },
        },
    },
}
