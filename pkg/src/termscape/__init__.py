"""termscape: contrast two document categories as a term scatterplot.

Each term in a shared vocabulary gets a coordinate per category from its
frequency rank, an association score from its distance to the category's
favored corner, and a log-odds z statistic; the result is packaged as a
deterministic JSON payload or a self-contained interactive HTML report.
"""

from .corpus import (
    Corpus,
    Document,
    Term,
    TermCounts,
    count_terms,
    merge_counts,
    parse_input,
    sentence_spans,
    term_text,
    tokenize,
    word_spans,
)
from .embeddings import (
    SimilarityResult,
    VectorTable,
    cosine_similarity,
    load_vectors,
    similar_category_terms,
    term_vector,
)
from .errors import ConfigError, InputError, TermscapeError
from .labeler import (
    SLOT_ORDER,
    FontMetrics,
    GridIndex,
    LabelPoint,
    OutOfBoundsError,
    PlacedLabel,
    Rect,
    estimate_label_box,
    place_labels,
)
from .layout import (
    RDYLBU_11,
    SIMILARITY_STOPS,
    ZERO_SCORE_COLOR,
    TermPoint,
    association_score,
    color_for,
    coordinate,
    corner_distance,
    diverging_color,
    interpolate_stops,
    layout_points,
    pixel_position,
    rank_terms,
    similarity_color,
)
from .report import (
    PAYLOAD_SCHEMA,
    SCHEMA_VERSION,
    build_payload,
    build_report,
    emit,
    excerpt_index,
    load_external_scores,
    payload_json,
    render_html,
)
from .stats import (
    StatsConfig,
    TermStats,
    associated_terms,
    compute_stats,
    log_odds_z,
    normal_cdf,
    two_sided_p,
)
from .vocab import (
    PMI_LOG_BASE,
    VocabEntry,
    Vocabulary,
    VocabularyConfig,
    build_vocabulary,
    pmi,
    term_probability,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "Corpus",
    "Document",
    "FontMetrics",
    "GridIndex",
    "InputError",
    "LabelPoint",
    "OutOfBoundsError",
    "PAYLOAD_SCHEMA",
    "PMI_LOG_BASE",
    "PlacedLabel",
    "RDYLBU_11",
    "Rect",
    "SCHEMA_VERSION",
    "SIMILARITY_STOPS",
    "SLOT_ORDER",
    "SimilarityResult",
    "StatsConfig",
    "Term",
    "TermCounts",
    "TermPoint",
    "TermStats",
    "TermscapeError",
    "VectorTable",
    "VocabEntry",
    "Vocabulary",
    "VocabularyConfig",
    "ZERO_SCORE_COLOR",
    "association_score",
    "associated_terms",
    "build_payload",
    "build_report",
    "build_vocabulary",
    "color_for",
    "compute_stats",
    "coordinate",
    "corner_distance",
    "cosine_similarity",
    "count_terms",
    "diverging_color",
    "emit",
    "excerpt_index",
    "interpolate_stops",
    "layout_points",
    "load_external_scores",
    "load_vectors",
    "log_odds_z",
    "merge_counts",
    "normal_cdf",
    "parse_input",
    "payload_json",
    "pixel_position",
    "place_labels",
    "pmi",
    "rank_terms",
    "render_html",
    "sentence_spans",
    "similar_category_terms",
    "similarity_color",
    "term_probability",
    "term_text",
    "term_vector",
    "tokenize",
    "two_sided_p",
    "word_spans",
]
