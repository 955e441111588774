import { readFileSync } from "node:fs";
import { join } from "node:path";
import { beforeEach, describe, expect, it } from "vitest";

import { interpolateStops, pointColor } from "../src/color";
import { type Payload, SCHEMA, schemaProblem } from "../src/payload";
import { boot, render, tooltipText } from "../src/viewer";

const fixtureRaw = readFileSync(
  join(process.cwd(), "test/fixtures/payload.json"),
  "utf-8",
);

const loadPayload = (): Payload => JSON.parse(fixtureRaw);

function mount(payloadText: string) {
  document.body.innerHTML =
    '<div id="termscape-error"></div>' +
    '<div id="termscape-root"></div>' +
    '<script type="application/json" id="termscape-data"></script>';
  document.getElementById("termscape-data")!.textContent = payloadText;
}

const circleFor = (term: string): SVGElement =>
  document.querySelector(`circle.ts-point[data-term="${term}"]`)!;

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("markers", () => {
  it("draws one marker per point at the payload coordinates", () => {
    mount(fixtureRaw);
    const payload = loadPayload();
    const state = boot();
    expect(state).not.toBeNull();

    const circles = document.querySelectorAll("circle.ts-point");
    expect(circles.length).toBe(payload.points.length);

    const { width, height } = payload.metadata.chart;
    for (const point of payload.points) {
      const circle = circleFor(point.term);
      expect(circle).not.toBeNull();
      expect(parseFloat(circle.getAttribute("cx")!)).toBe(point.x_a * width);
      expect(parseFloat(circle.getAttribute("cy")!)).toBe((1 - point.x_b) * height);
      expect(parseFloat(circle.getAttribute("r")!)).toBe(
        payload.metadata.font_metrics.point_radius,
      );
    }
  });

  it("colors markers exactly as the core's ramp does", () => {
    mount(fixtureRaw);
    boot();
    // hex values frozen from the core implementation for this fixture
    const golden: Record<string, string> = {
      river: "#f88b51",
      mountain: "#4065ac",
      the: "#ffffbf",
      snow: "#578bbf",
    };
    for (const [term, hex] of Object.entries(golden)) {
      expect(circleFor(term).getAttribute("fill")).toBe(hex);
    }
  });
});

describe("labels", () => {
  it("draws every label exactly at its payload rect, no re-layout", () => {
    mount(fixtureRaw);
    const payload = loadPayload();
    boot();

    const texts = document.querySelectorAll("text.ts-label");
    expect(texts.length).toBe(payload.labels.length);
    for (const label of payload.labels) {
      const node = document.querySelector(`text.ts-label[data-term="${label.term}"]`)!;
      expect(node).not.toBeNull();
      expect(node.textContent).toBe(label.term);
      expect(Math.abs(parseFloat(node.getAttribute("x")!) - label.x_min)).toBeLessThanOrEqual(0.5);
      expect(Math.abs(parseFloat(node.getAttribute("y")!) - label.y_max)).toBeLessThanOrEqual(0.5);
    }
  });
});

describe("sidebars and captions", () => {
  it("lists top terms per category in payload order", () => {
    mount(fixtureRaw);
    const payload = loadPayload();
    boot();

    const [catA, catB] = payload.metadata.categories;
    const headings = Array.from(
      document.querySelectorAll("#termscape-sidebar h2"),
      (h) => h.textContent,
    );
    expect(headings).toContain(`Top ${catA}`);
    expect(headings).toContain(`Top ${catB}`);

    const lists = document.querySelectorAll("#termscape-sidebar ol");
    const topA = Array.from(lists[0]!.querySelectorAll("li"), (li) => li.textContent);
    expect(topA).toEqual(payload.top_terms[catA]);
  });

  it("lists similar terms with their similarity values", () => {
    mount(fixtureRaw);
    const payload = loadPayload();
    boot();

    const [catA] = payload.metadata.categories;
    const heading = Array.from(document.querySelectorAll("#termscape-sidebar h2")).find(
      (h) => h.textContent === `Similar (${catA})`,
    )!;
    expect(heading).toBeDefined();
    const list = heading.nextElementSibling!;
    const entries = Array.from(list.querySelectorAll("li"), (li) => li.textContent);
    expect(entries).toEqual(
      payload.similar_terms![catA]!.map(([term, value]) => `${term} (${value.toFixed(3)})`),
    );
  });

  it("captions both axes with the category names", () => {
    mount(fixtureRaw);
    const payload = loadPayload();
    boot();
    const [catA, catB] = payload.metadata.categories;
    const svgText = Array.from(
      document.querySelectorAll("#termscape-chart text"),
      (t) => t.textContent,
    );
    expect(svgText).toContain(`${catA} frequency rank →`);
    expect(svgText).toContain(`↑ ${catB} frequency rank`);
  });
});

describe("hover", () => {
  it("shows the payload statistics verbatim in the tooltip", () => {
    mount(fixtureRaw);
    const payload = loadPayload();
    const state = boot()!;
    const point = payload.points.find((p) => p.term === "river")!;

    circleFor("river").dispatchEvent(new MouseEvent("mousemove", { bubbles: true }));
    const tooltip = document.getElementById("termscape-tooltip")!;
    expect(tooltip.style.display).toBe("block");
    expect(state.hovered).toBe("river");
    expect(circleFor("river").classList.contains("ts-hot")).toBe(true);

    const [catA, catB] = payload.metadata.categories;
    expect(tooltip.textContent).toBe(tooltipText(point, catA, catB));
    expect(tooltip.textContent).toContain(
      `${catA}: ${point.freq_a} uses in ${point.doc_freq_a} docs`,
    );
    expect(tooltip.textContent).toContain(
      `${catB}: ${point.freq_b} uses in ${point.doc_freq_b} docs`,
    );

    // byte-traceable: the digits shown are the digits in the payload JSON
    // (labels also carry "term", so anchor on the "z" key to get the point)
    const record = fixtureRaw.match(/\{[^{}]*"term":"river"[^{}]*"z":[^{}]*\}/)![0];
    const zLiteral = record.match(/"z":(-?[\d.eE+-]+)/)![1];
    const pLiteral = record.match(/"p":(-?[\d.eE+-]+)/)![1];
    expect(tooltip.textContent).toContain(`z = ${zLiteral}, p = ${pLiteral}`);

    circleFor("river").dispatchEvent(new MouseEvent("mouseleave", { bubbles: true }));
    expect(tooltip.style.display).toBe("none");
    expect(state.hovered).toBeNull();
    expect(circleFor("river").classList.contains("ts-hot")).toBe(false);
  });
});

describe("selection", () => {
  it("click shows the term's excerpts grouped by category", () => {
    mount(fixtureRaw);
    const payload = loadPayload();
    const state = boot()!;

    circleFor("river").dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(state.selected).toBe("river");

    const panel = document.getElementById("termscape-excerpts")!;
    expect(panel.querySelector("h2")!.textContent).toBe("Excerpts: river");

    const [catA, catB] = payload.metadata.categories;
    const groups = Array.from(panel.querySelectorAll("h3"), (h) => h.textContent);
    const snippets = payload.excerpts["river"]!;
    const expectGroups = [catA, catB].filter((c) =>
      snippets.some((s) => s.category === c),
    );
    expect(groups).toEqual(expectGroups);

    const quotes = Array.from(panel.querySelectorAll("blockquote"), (q) => q.textContent);
    const expected = [catA, catB].flatMap((cat) =>
      snippets.filter((s) => s.category === cat).map((s) => `${s.text} [${s.doc}]`),
    );
    expect(quotes).toEqual(expected);
  });

  it("sidebar similar-term click behaves like hover plus select", () => {
    mount(fixtureRaw);
    const payload = loadPayload();
    const state = boot()!;
    const [catA] = payload.metadata.categories;
    const [term] = payload.similar_terms![catA]![0]!;

    const item = Array.from(document.querySelectorAll("#termscape-sidebar li")).find(
      (li) => li.getAttribute("data-term") === term && li.textContent!.includes("("),
    )!;
    item.dispatchEvent(new MouseEvent("click", { bubbles: true }));

    expect(state.selected).toBe(term);
    expect(state.hovered).toBe(term);
    expect(circleFor(term).classList.contains("ts-hot")).toBe(true);
    const panel = document.getElementById("termscape-excerpts")!;
    expect(panel.querySelector("h2")!.textContent).toBe(`Excerpts: ${term}`);
  });
});

describe("color modes", () => {
  it("offers exactly the modes the payload has data for", () => {
    mount(fixtureRaw);
    boot();
    const names = Array.from(
      document.querySelectorAll("#termscape-modes button"),
      (b) => b.getAttribute("data-mode"),
    );
    expect(names).toEqual(["association", "similarity", "external"]);
  });

  it("similarity mode colors from the payload's similarity stops", () => {
    mount(fixtureRaw);
    const payload = loadPayload();
    const state = boot()!;

    document
      .querySelector('button[data-mode="similarity"]')!
      .dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(state.mode).toBe("similarity");

    // frozen from the core for this fixture's snow similarity
    expect(circleFor("snow").getAttribute("fill")).toBe("#764d9e");
    // terms without a vector fall back to the neutral color
    const meta = payload.metadata;
    const noVector = payload.points.find((p) => p.similarity === undefined)!;
    expect(circleFor(noVector.term).getAttribute("fill")).toBe(meta.zero_score_color);
  });

  it("external mode scales by the largest absolute score", () => {
    mount(fixtureRaw);
    const payload = loadPayload();
    boot();

    document
      .querySelector('button[data-mode="external"]')!
      .dispatchEvent(new MouseEvent("click", { bubbles: true }));

    // river carries the max |score| (0.8), so it pegs the blue end;
    // mountain at -0.6/0.8 lands at the frozen core value; an exact
    // zero renders neutral, and unscored terms render neutral too
    expect(circleFor("river").getAttribute("fill")).toBe("#313695");
    expect(circleFor("mountain").getAttribute("fill")).toBe("#de3f2e");
    expect(circleFor("the").getAttribute("fill")).toBe(payload.metadata.zero_score_color);
    expect(circleFor("snow").getAttribute("fill")).toBe(payload.metadata.zero_score_color);
  });
});

describe("read-only rendering", () => {
  it("interactions mutate only the view state, never the payload", () => {
    mount(fixtureRaw);
    const payload = loadPayload();
    const before = structuredClone(payload);
    const root = document.getElementById("termscape-root")!;
    const state = render(root, payload);

    circleFor("river").dispatchEvent(new MouseEvent("mousemove", { bubbles: true }));
    circleFor("river").dispatchEvent(new MouseEvent("click", { bubbles: true }));
    document
      .querySelector('button[data-mode="similarity"]')!
      .dispatchEvent(new MouseEvent("click", { bubbles: true }));

    expect(payload).toEqual(before);
    expect(state).toEqual({ hovered: "river", selected: "river", mode: "similarity" });
  });
});

describe("schema gate", () => {
  it("rejects a wrong schema with a banner and renders nothing", () => {
    const tampered = loadPayload();
    tampered.schema = "termscape-payload/2";
    mount(JSON.stringify(tampered));

    expect(boot()).toBeNull();
    const banner = document.getElementById("termscape-error")!;
    expect(banner.style.display).toBe("block");
    expect(banner.textContent).toContain("termscape-payload/2");
    expect(banner.textContent).toContain(SCHEMA);
    expect(document.getElementById("termscape-root")!.children.length).toBe(0);
    expect(document.querySelectorAll("circle.ts-point").length).toBe(0);
  });

  it("rejects unparsable and structurally broken payloads the same way", () => {
    mount("{not json");
    expect(boot()).toBeNull();
    expect(document.getElementById("termscape-error")!.textContent).toContain(
      "not valid JSON",
    );
    expect(document.getElementById("termscape-root")!.children.length).toBe(0);

    const gutted = loadPayload() as unknown as Record<string, unknown>;
    delete gutted.points;
    mount(JSON.stringify(gutted));
    expect(boot()).toBeNull();
    expect(document.getElementById("termscape-error")!.style.display).toBe("block");
    expect(document.querySelectorAll("circle.ts-point").length).toBe(0);
  });

  it("schemaProblem pinpoints missing pieces", () => {
    expect(schemaProblem(loadPayload())).toBeNull();
    expect(schemaProblem(null)).toContain("not an object");
    expect(schemaProblem({ schema: "x" })).toContain("unsupported payload schema");
    expect(schemaProblem({ ...loadPayload(), labels: undefined })).toContain("labels");
  });
});

describe("minimal payload", () => {
  const minimal = (): Payload => ({
    schema: SCHEMA,
    metadata: {
      categories: ["a", "b"],
      min_count: 1,
      min_pmi: 0,
      phi_mode: "token",
      pmi_log_base: 2,
      alpha: 0.01,
      significance_level: 0.05,
      chart: { width: 100, height: 100 },
      font_metrics: { glyph_width: 6, line_height: 12, point_radius: 3, label_offset: 3 },
      slot_order: ["N"],
      color_stops: ["#a50026", "#ffffbf", "#313695"],
      similarity_color_stops: ["#d9d9d9", "#3f007d"],
      zero_score_color: "#d3d3d3",
      document_counts: [1, 1],
      word_counts: [2, 2],
      bigram_counts: [0, 0],
      skipped_documents: 0,
    },
    points: [
      {
        term: "alpha", x_a: 0.5, x_b: 1.0, s_a: 1.118033988749895, s_b: 0.5,
        assoc_a: 0.2094305849579051, assoc_b: 0.6464466094067263, color: 0.4370160244488212,
        freq_a: 1, freq_b: 2, doc_freq_a: 1, doc_freq_b: 1, z: 0.5, p: 0.61,
      },
      {
        term: "beta", x_a: 1.0, x_b: 0.5, s_a: 0.5, s_b: 1.118033988749895,
        assoc_a: 0.6464466094067263, assoc_b: 0.2094305849579051, color: -0.4370160244488212,
        freq_a: 2, freq_b: 1, doc_freq_a: 1, doc_freq_b: 1, z: -0.5, p: 0.61,
      },
    ],
    labels: [{ term: "alpha", slot: "N", x_min: 35, y_min: -18, x_max: 65, y_max: -6 }],
    top_terms: { a: ["beta", "alpha"], b: ["alpha", "beta"] },
    excerpts: { alpha: [], beta: [{ doc: "d1", category: "a", text: "beta beta" }] },
  });

  it("two points make two markers and two sidebar entries", () => {
    mount(JSON.stringify(minimal()));
    boot();
    expect(document.querySelectorAll("circle.ts-point").length).toBe(2);
    const lists = document.querySelectorAll("#termscape-sidebar ol");
    expect(lists.length).toBe(2); // no similar_terms in this payload
    expect(lists[0]!.querySelectorAll("li").length).toBe(2);
    expect(lists[1]!.querySelectorAll("li").length).toBe(2);
  });

  it("a term with no excerpts says so instead of showing stale content", () => {
    mount(JSON.stringify(minimal()));
    boot();
    circleFor("beta").dispatchEvent(new MouseEvent("click", { bubbles: true }));
    circleFor("alpha").dispatchEvent(new MouseEvent("click", { bubbles: true }));
    const panel = document.getElementById("termscape-excerpts")!;
    expect(panel.querySelector("h2")!.textContent).toBe("Excerpts: alpha");
    expect(panel.textContent).toContain("No excerpts recorded.");
    expect(panel.textContent).not.toContain("beta beta");
  });
});

describe("ramp math", () => {
  it("hits the frozen endpoint and midpoint colors", () => {
    const stops = loadPayload().metadata.color_stops;
    expect(interpolateStops(stops, 0)).toBe("#a50026");
    expect(interpolateStops(stops, 0.5)).toBe("#ffffbf");
    expect(interpolateStops(stops, 1)).toBe("#313695");
    // clamped outside [0, 1]
    expect(interpolateStops(stops, -3)).toBe("#a50026");
    expect(interpolateStops(stops, 7)).toBe("#313695");
  });

  it("pointColor falls back to neutral for absent data", () => {
    const payload = loadPayload();
    const meta = payload.metadata;
    const bare = payload.points.find((p) => p.similarity === undefined)!;
    expect(pointColor(bare, "similarity", meta, 1)).toBe(meta.zero_score_color);
    expect(pointColor(bare, "external", meta, 1)).toBe(meta.zero_score_color);
  });
});
