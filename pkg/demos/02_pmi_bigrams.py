"""Watch the PMI gate sort real phrases from coincidental word pairs.

Run with: python3 demos/02_pmi_bigrams.py

A bigram enters the vocabulary only when its pointwise mutual information
exceeds the threshold, i.e. the pair occurs together far more often than
its words' individual frequencies predict. "dark chocolate" is a phrase;
"the dark" is two common words that happen to touch.
"""

from sample_data import tasting_corpus

from termscape import VocabularyConfig, build_vocabulary, count_terms, pmi, term_text

counts = count_terms(tasting_corpus())

candidates = [
    term for term in counts.token_counts
    if len(term) == 2 and counts.phi(term) >= 2
]
scored = sorted(candidates, key=lambda t: pmi(counts, t), reverse=True)

print(f"{'bigram':<22} {'count':>5} {'PMI':>7}")
for term in scored:
    print(f"{term_text(term):<22} {counts.phi(term):>5} {pmi(counts, term):>7.2f}")

threshold = 4.0
vocab = build_vocabulary(counts, VocabularyConfig(min_count=2, min_pmi=threshold))
kept = [e.text for e in vocab.entries if len(e.term) == 2]
print(f"\nbigrams admitted at PMI > {threshold}: {', '.join(kept) or '(none)'}")
