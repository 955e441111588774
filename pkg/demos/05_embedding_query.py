"""Steer the view with a semantic query against word vectors.

Run with: python3 demos/05_embedding_query.py

Given an embedding table, every category-associated term is scored by
cosine similarity to a query word, so the chart can answer "which of
each side's terms are most like X?". The tiny hand-built vectors below
encode two directions: taste (dim 0-1) and aroma (dim 2-3).
"""

from pathlib import Path

from sample_data import tasting_corpus

from termscape import (
    StatsConfig,
    VocabularyConfig,
    associated_terms,
    build_vocabulary,
    compute_stats,
    count_terms,
    load_vectors,
    similar_category_terms,
)

VECTOR_ROWS = """\
bitter     0.9  0.1  0.1  0.0
roast      0.8  0.3  0.2  0.1
espresso   0.7  0.4  0.1  0.2
chocolate  0.5  0.6  0.3  0.2
sweet      0.1  0.9  0.2  0.1
floral     0.1  0.2  0.9  0.3
jasmine    0.0  0.2  0.9  0.4
green      0.2  0.3  0.6  0.5
steep      0.3  0.2  0.4  0.8
leaves     0.2  0.1  0.5  0.7
"""

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)
vector_path = out_dir / "tiny_vectors.txt"
vector_path.write_text(VECTOR_ROWS, encoding="utf-8")

table = load_vectors(vector_path)
print(f"loaded {len(table)} vectors of dimension {table.dim}")

vocab = build_vocabulary(
    count_terms(tasting_corpus()), VocabularyConfig(min_count=2, min_pmi=2.0)
)
# very lenient significance: sixteen documents support only weak contrasts
config = StatsConfig(significance_level=0.9)
associated = associated_terms(compute_stats(vocab, config), config)

for query in ("floral", "bitter"):
    result = similar_category_terms(query, vocab, associated, table, k=4)
    print(f"\nquery: {query!r}")
    for k, side in enumerate(("coffee", "tea")):
        pairs = ", ".join(f"{text} ({value:.2f})" for text, value in result.ranked[k])
        print(f"  {side}: {pairs or '(no terms in vector table)'}")
