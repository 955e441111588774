"""How tied frequencies turn into distinct, labelable positions.

Run with: python3 demos/03_rank_layout_ties.py

Terms with equal counts share a frequency but not a rank: the tie breaks
alphabetically, so every term gets its own grid line on each axis. The
label placer then fits captions into the gaps this spacing creates.
"""

import numpy as np

from termscape import (
    FontMetrics,
    LabelPoint,
    VocabularyConfig,
    build_vocabulary,
    count_terms,
    layout_points,
    pixel_position,
    place_labels,
)
from termscape.corpus import Corpus, Document

rng = np.random.default_rng(7)

# forty words, only five distinct count values: ties everywhere
words = [f"{c}{i}" for c in "abcdefgh" for i in range(5)]
rows = []
for label in ("north", "south"):
    stream = []
    order = rng.permutation(len(words))
    for j, w in enumerate(order):
        stream += [words[w]] * (2 + j % 5)
    stream = [stream[i] for i in rng.permutation(len(stream))]
    text = " ".join(stream)
    rows.append(Document(f"{label}-1", label, text))
corpus = Corpus(("north", "south"), rows, 0)

vocab = build_vocabulary(count_terms(corpus), VocabularyConfig(min_count=2, min_pmi=99.0))
points = layout_points(vocab)

print("sample of tied terms (same north count, distinct ranks):")
by_freq = {}
for p in points:
    by_freq.setdefault(p.freq_a, []).append(p)
freq, group = max(by_freq.items(), key=lambda kv: len(kv[1]))
for p in sorted(group, key=lambda p: p.rank_a)[:6]:
    print(f"  {p.text:<4} north count {freq}: rank {p.rank_a:>2}, x = {p.x_a:.3f}")

metrics = FontMetrics()
width, height = 800.0, 600.0
anchors = []
for p in points:
    px, py = pixel_position(p.x_a, p.x_b, width, height)
    anchors.append(LabelPoint(p.text, px, py, max(p.assoc_a, p.assoc_b)))
placed = place_labels(anchors, metrics, width, height)

print(f"\nlabels placed: {len(placed)} of {len(points)} terms")
slots = sorted({l.slot for l in placed})
print(f"slots used: {', '.join(slots)}")
