"""Build a complete interactive report from a handful of tasting notes.

Run with: python3 demos/01_basic_report.py

The output is a single self-contained HTML file; open it in any browser.
"""

from pathlib import Path

from sample_data import tasting_corpus

from termscape import VocabularyConfig, build_report, emit

corpus = tasting_corpus()
print(f"corpus: {corpus.size('coffee')} coffee docs, {corpus.size('tea')} tea docs")

# the corpus is tiny, so lower the frequency and PMI gates
payload = build_report(
    corpus,
    vocab_config=VocabularyConfig(min_count=2, min_pmi=2.0),
)

print(f"vocabulary: {len(payload['points'])} terms")
print(f"labeled on the chart: {len(payload['labels'])}")
for category, terms in payload["top_terms"].items():
    print(f"most {category}-associated: {', '.join(terms[:6])}")

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)
path = emit(payload, "html", out_dir / "tasting.html")
print(f"wrote {path}")
