"""A small tasting-notes corpus shared by the demo scripts.

Two categories of short reviews with deliberately contrasting vocabulary:
coffee notes lean on roast and chocolate words, tea notes on floral and
steeping words, and a few words appear on both sides.
"""

from termscape import Corpus, Document

COFFEE = [
    "Dark roast with heavy crema. The dark chocolate finish lingers and the "
    "espresso shot pulls thick. Bitter edge, but balanced.",
    "A bright espresso with caramel sweetness. Dark chocolate notes again, "
    "less bitter than the last roast.",
    "The crema collapses fast. Roast smells burnt, taste is bitter and flat. "
    "Not a shot to repeat.",
    "Smooth body, hints of dark chocolate and toasted hazelnut. The roast "
    "level suits a morning espresso.",
    "Thin crema, sour start, then a pleasant cocoa middle. Medium roast "
    "beans, freshly ground.",
    "Strong bitter espresso with a syrupy body. Dark roast beans from the "
    "same grower as before.",
    "Velvety shot. Sweet cocoa, mild acidity, durable crema. Roast date was "
    "only a week ago.",
    "Overextracted and bitter. Even the dark chocolate aroma cannot rescue "
    "this espresso.",
]

TEA = [
    "Jasmine green tea with a soft floral nose. Short steep, pale liquor, "
    "gentle sweetness in the leaves.",
    "The leaves unfurl slowly. Floral aroma, mostly jasmine, with a grassy "
    "green finish. Second steep is rounder.",
    "Astringent when the steep runs long. Still, the jasmine perfume holds "
    "and the green color is lovely.",
    "Delicate white tea. Honeysuckle and hay, a floral whisper rather than "
    "a shout. Quick steep recommended.",
    "Toasty oolong, partly oxidized leaves, orchid sweetness. A longer "
    "steep brings out stone fruit.",
    "Fresh spring harvest. Vegetal green notes, steamed leaves, a floral "
    "lift that fades slowly.",
    "Smoky black tea, malty body. Not floral at all, yet the long steep "
    "stays smooth and sweet.",
    "Cold brew of jasmine green tea. Crisp, low astringency, the floral "
    "top note survives the ice.",
]


def tasting_corpus() -> Corpus:
    docs = [
        Document(f"coffee-{i}", "coffee", text) for i, text in enumerate(COFFEE, 1)
    ] + [
        Document(f"tea-{i}", "tea", text) for i, text in enumerate(TEA, 1)
    ]
    return Corpus(("coffee", "tea"), docs, 0)
