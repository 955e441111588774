/** Render an embedded termscape payload as an interactive scatterplot.
 *
 * Everything displayed is read straight from the payload: coordinates,
 * label rectangles, statistics, term lists, excerpts. The viewer does no
 * layout and no math beyond color interpolation from payload-carried
 * stops, so a report renders identically to what the core computed.
 */

import { type ColorMode, pointColor } from "./color";
import { type Payload, type Point, SCHEMA, schemaProblem } from "./payload";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface ViewState {
  hovered: string | null;
  selected: string | null;
  mode: ColorMode;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
  parent?: Node,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (parent) parent.appendChild(node);
  return node;
}

function svgEl(tag: string, attrs: Record<string, string | number>, parent?: Node): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, String(value));
  if (parent) parent.appendChild(node);
  return node as SVGElement;
}

/** Tooltip body: per-category statistics, verbatim from the payload. */
export function tooltipText(point: Point, catA: string, catB: string): string {
  let body =
    point.term +
    `\n${catA}: ${point.freq_a} uses in ${point.doc_freq_a} docs` +
    `\n${catB}: ${point.freq_b} uses in ${point.doc_freq_b} docs` +
    `\nassociation ${catA}: ${point.assoc_a.toFixed(3)}` +
    `\nassociation ${catB}: ${point.assoc_b.toFixed(3)}` +
    `\nz = ${point.z}, p = ${point.p}`;
  if (point.similarity !== undefined) body += `\nsimilarity: ${point.similarity}`;
  if (point.external_score !== undefined) body += `\nscore: ${point.external_score}`;
  return body;
}

export function render(root: HTMLElement, payload: Payload): ViewState {
  const meta = payload.metadata;
  const [catA, catB] = meta.categories;
  const { width, height } = meta.chart;
  const state: ViewState = { hovered: null, selected: null, mode: "association" };

  const byTerm = new Map(payload.points.map((p) => [p.term, p]));
  const hasSimilarity = payload.points.some((p) => p.similarity !== undefined);
  const hasExternal = payload.points.some((p) => p.external_score !== undefined);
  let externalScale = 0;
  for (const p of payload.points) {
    if (p.external_score !== undefined) {
      externalScale = Math.max(externalScale, Math.abs(p.external_score));
    }
  }

  const header = el("h1", {}, root);
  header.textContent = `${catA} vs ${catB}`;
  const subtitle = el("div", { id: "termscape-subtitle" }, root);
  subtitle.textContent =
    `${payload.points.length} terms; ` +
    `${meta.document_counts[0]} ${catA} docs (${meta.word_counts[0]} words), ` +
    `${meta.document_counts[1]} ${catB} docs (${meta.word_counts[1]} words)`;

  // color-mode switches exist only for data the payload actually carries
  const modes = el("div", { id: "termscape-modes" }, root);
  const modeNames: ColorMode[] = ["association"];
  if (hasSimilarity) modeNames.push("similarity");
  if (hasExternal) modeNames.push("external");
  const buttons = new Map<ColorMode, HTMLButtonElement>();
  for (const name of modeNames) {
    const button = el("button", { type: "button", "data-mode": name }, modes);
    button.textContent = name;
    button.addEventListener("click", () => setMode(name));
    buttons.set(name, button);
  }

  const main = el("div", { id: "termscape-main" }, root);
  const svg = svgEl(
    "svg",
    { id: "termscape-chart", width, height, viewBox: `0 0 ${width} ${height}` },
    main,
  );
  const sidebar = el("div", { class: "ts-sidebar", id: "termscape-sidebar" }, main);
  const tooltip = el("div", { id: "termscape-tooltip" }, document.body);
  const excerptPanel = el("div", { id: "termscape-excerpts" }, root);

  const xCaption = svgEl(
    "text",
    { x: width / 2, y: height - 4, "text-anchor": "middle", fill: "#555" },
    svg,
  );
  xCaption.textContent = `${catA} frequency rank →`;
  const yCaption = svgEl("text", { x: 4, y: 12, fill: "#555" }, svg);
  yCaption.textContent = `↑ ${catB} frequency rank`;

  const circles = new Map<string, SVGElement>();
  for (const point of payload.points) {
    const circle = svgEl(
      "circle",
      {
        class: "ts-point",
        cx: point.x_a * width,
        cy: (1 - point.x_b) * height,
        r: meta.font_metrics.point_radius,
        "data-term": point.term,
      },
      svg,
    );
    circle.addEventListener("mousemove", (event) => {
      highlight(point.term);
      const mouse = event as MouseEvent;
      tooltip.style.display = "block";
      tooltip.style.left = `${mouse.pageX + 12}px`;
      tooltip.style.top = `${mouse.pageY + 12}px`;
    });
    circle.addEventListener("mouseleave", () => {
      highlight(null);
      tooltip.style.display = "none";
    });
    circle.addEventListener("click", () => select(point.term));
    circles.set(point.term, circle);
  }

  // labels were placed by the core; draw each exactly at its payload rect
  const labelFont = `${meta.font_metrics.line_height - 2}px`;
  for (const label of payload.labels) {
    const text = svgEl(
      "text",
      { class: "ts-label", x: label.x_min, y: label.y_max, "data-term": label.term },
      svg,
    );
    text.style.fontFamily = "ui-monospace, Menlo, Consolas, monospace";
    text.style.fontSize = labelFont;
    text.textContent = label.term;
  }

  function termList(title: string, entries: [string, string][]) {
    const heading = el("h2", {}, sidebar);
    heading.textContent = title;
    const list = el("ol", {}, sidebar);
    for (const [display, term] of entries) {
      const item = el("li", { "data-term": term }, list);
      item.textContent = display;
      // sidebar click behaves like hovering the point and selecting it
      item.addEventListener("click", () => {
        highlight(term);
        select(term);
      });
    }
  }

  const plain = (names: string[]): [string, string][] => names.map((n) => [n, n]);
  termList(`Top ${catA}`, plain(payload.top_terms[catA] ?? []));
  termList(`Top ${catB}`, plain(payload.top_terms[catB] ?? []));
  if (payload.similar_terms) {
    for (const cat of [catA, catB]) {
      const pairs = payload.similar_terms[cat] ?? [];
      termList(
        `Similar (${cat})`,
        pairs.map(([term, value]) => [`${term} (${value.toFixed(3)})`, term]),
      );
    }
  }

  function highlight(term: string | null) {
    if (term !== null && !byTerm.has(term)) return;
    if (state.hovered !== null) circles.get(state.hovered)?.classList.remove("ts-hot");
    state.hovered = term;
    if (term === null) return;
    circles.get(term)?.classList.add("ts-hot");
    const point = byTerm.get(term)!;
    tooltip.textContent = tooltipText(point, catA, catB);
  }

  function select(term: string) {
    if (!byTerm.has(term)) return;
    state.selected = term;
    excerptPanel.textContent = "";
    const heading = el("h2", {}, excerptPanel);
    heading.textContent = `Excerpts: ${term}`;
    const snippets = payload.excerpts[term] ?? [];
    for (const category of [catA, catB]) {
      const group = snippets.filter((s) => s.category === category);
      if (!group.length) continue;
      const sub = el("h3", {}, excerptPanel);
      sub.textContent = category;
      for (const snippet of group) {
        const quote = el("blockquote", {}, excerptPanel);
        quote.textContent = `${snippet.text} [${snippet.doc}]`;
      }
    }
    if (!snippets.length) {
      const none = el("p", {}, excerptPanel);
      none.textContent = "No excerpts recorded.";
    }
  }

  function setMode(name: ColorMode) {
    state.mode = name;
    for (const [other, button] of buttons) {
      button.className = other === name ? "active" : "";
    }
    for (const [term, circle] of circles) {
      circle.setAttribute("fill", pointColor(byTerm.get(term)!, name, meta, externalScale));
    }
  }

  setMode("association");
  return state;
}

/** Entry point: parse the embedded payload and render, or show the banner. */
export function boot(): ViewState | null {
  const dataNode = document.getElementById("termscape-data");
  const root = document.getElementById("termscape-root");
  const banner = document.getElementById("termscape-error");
  if (!dataNode || !root || !banner) return null;

  const fail = (message: string): null => {
    banner.textContent = `termscape: ${message}`;
    banner.style.display = "block";
    return null;
  };

  let parsed: unknown;
  try {
    parsed = JSON.parse(dataNode.textContent ?? "");
  } catch {
    return fail("payload is not valid JSON");
  }
  const problem = schemaProblem(parsed);
  if (problem !== null) return fail(problem);
  return render(root, parsed as Payload);
}

export { SCHEMA };
