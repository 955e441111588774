"use strict";
(() => {
  // src/color.ts
  function hexToRgb(hex) {
    return [
      parseInt(hex.slice(1, 3), 16),
      parseInt(hex.slice(3, 5), 16),
      parseInt(hex.slice(5, 7), 16)
    ];
  }
  function rgbToHex(rgb) {
    let out = "#";
    for (const channel of rgb) {
      out += Math.round(channel).toString(16).padStart(2, "0");
    }
    return out;
  }
  function interpolateStops(stops, t) {
    const clamped = Math.min(Math.max(t, 0), 1);
    const span = stops.length - 1;
    const idx = Math.min(Math.floor(clamped * span), span - 1);
    const local = clamped * span - idx;
    const lo = hexToRgb(stops[idx]);
    const hi = hexToRgb(stops[idx + 1]);
    return rgbToHex([
      lo[0] + (hi[0] - lo[0]) * local,
      lo[1] + (hi[1] - lo[1]) * local,
      lo[2] + (hi[2] - lo[2]) * local
    ]);
  }
  function pointColor(point, mode, meta, externalScale) {
    if (mode === "similarity") {
      const s = point.similarity;
      if (s === void 0) return meta.zero_score_color;
      return interpolateStops(meta.similarity_color_stops, Math.max(s, 0));
    }
    if (mode === "external") {
      const e = point.external_score;
      if (e === void 0 || e === 0) return meta.zero_score_color;
      const v = externalScale > 0 ? e / externalScale : 0;
      return interpolateStops(meta.color_stops, (v + 1) / 2);
    }
    return interpolateStops(meta.color_stops, (point.color + 1) / 2);
  }

  // src/payload.ts
  var SCHEMA = "termscape-payload/1";
  function schemaProblem(payload) {
    if (payload === null || typeof payload !== "object") {
      return "payload is not an object";
    }
    const p = payload;
    if (p.schema !== SCHEMA) {
      return `unsupported payload schema ${JSON.stringify(p.schema ?? "(missing)")}; this viewer expects ${JSON.stringify(SCHEMA)}`;
    }
    if (!Array.isArray(p.points)) return "payload has no points array";
    if (!Array.isArray(p.labels)) return "payload has no labels array";
    const meta = p.metadata;
    if (!meta || typeof meta !== "object") return "payload has no metadata";
    if (!Array.isArray(meta.categories) || meta.categories.length !== 2) {
      return "metadata.categories must name two categories";
    }
    const chart = meta.chart;
    if (!chart || typeof chart.width !== "number" || typeof chart.height !== "number") {
      return "metadata.chart must carry pixel dimensions";
    }
    if (typeof p.top_terms !== "object" || p.top_terms === null) {
      return "payload has no top_terms";
    }
    if (typeof p.excerpts !== "object" || p.excerpts === null) {
      return "payload has no excerpts";
    }
    return null;
  }

  // src/viewer.ts
  var SVG_NS = "http://www.w3.org/2000/svg";
  function el(tag, attrs, parent) {
    const node = document.createElement(tag);
    for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
    if (parent) parent.appendChild(node);
    return node;
  }
  function svgEl(tag, attrs, parent) {
    const node = document.createElementNS(SVG_NS, tag);
    for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, String(value));
    if (parent) parent.appendChild(node);
    return node;
  }
  function tooltipText(point, catA, catB) {
    let body = point.term + `
${catA}: ${point.freq_a} uses in ${point.doc_freq_a} docs
${catB}: ${point.freq_b} uses in ${point.doc_freq_b} docs
association ${catA}: ${point.assoc_a.toFixed(3)}
association ${catB}: ${point.assoc_b.toFixed(3)}
z = ${point.z}, p = ${point.p}`;
    if (point.similarity !== void 0) body += `
similarity: ${point.similarity}`;
    if (point.external_score !== void 0) body += `
score: ${point.external_score}`;
    return body;
  }
  function render(root, payload) {
    const meta = payload.metadata;
    const [catA, catB] = meta.categories;
    const { width, height } = meta.chart;
    const state = { hovered: null, selected: null, mode: "association" };
    const byTerm = new Map(payload.points.map((p) => [p.term, p]));
    const hasSimilarity = payload.points.some((p) => p.similarity !== void 0);
    const hasExternal = payload.points.some((p) => p.external_score !== void 0);
    let externalScale = 0;
    for (const p of payload.points) {
      if (p.external_score !== void 0) {
        externalScale = Math.max(externalScale, Math.abs(p.external_score));
      }
    }
    const header = el("h1", {}, root);
    header.textContent = `${catA} vs ${catB}`;
    const subtitle = el("div", { id: "termscape-subtitle" }, root);
    subtitle.textContent = `${payload.points.length} terms; ${meta.document_counts[0]} ${catA} docs (${meta.word_counts[0]} words), ${meta.document_counts[1]} ${catB} docs (${meta.word_counts[1]} words)`;
    const modes = el("div", { id: "termscape-modes" }, root);
    const modeNames = ["association"];
    if (hasSimilarity) modeNames.push("similarity");
    if (hasExternal) modeNames.push("external");
    const buttons = /* @__PURE__ */ new Map();
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
      main
    );
    const sidebar = el("div", { class: "ts-sidebar", id: "termscape-sidebar" }, main);
    const tooltip = el("div", { id: "termscape-tooltip" }, document.body);
    const excerptPanel = el("div", { id: "termscape-excerpts" }, root);
    const xCaption = svgEl(
      "text",
      { x: width / 2, y: height - 4, "text-anchor": "middle", fill: "#555" },
      svg
    );
    xCaption.textContent = `${catA} frequency rank \u2192`;
    const yCaption = svgEl("text", { x: 4, y: 12, fill: "#555" }, svg);
    yCaption.textContent = `\u2191 ${catB} frequency rank`;
    const circles = /* @__PURE__ */ new Map();
    for (const point of payload.points) {
      const circle = svgEl(
        "circle",
        {
          class: "ts-point",
          cx: point.x_a * width,
          cy: (1 - point.x_b) * height,
          r: meta.font_metrics.point_radius,
          "data-term": point.term
        },
        svg
      );
      circle.addEventListener("mousemove", (event) => {
        highlight(point.term);
        const mouse = event;
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
    const labelFont = `${meta.font_metrics.line_height - 2}px`;
    for (const label of payload.labels) {
      const text = svgEl(
        "text",
        { class: "ts-label", x: label.x_min, y: label.y_max, "data-term": label.term },
        svg
      );
      text.style.fontFamily = "ui-monospace, Menlo, Consolas, monospace";
      text.style.fontSize = labelFont;
      text.textContent = label.term;
    }
    function termList(title, entries) {
      const heading = el("h2", {}, sidebar);
      heading.textContent = title;
      const list = el("ol", {}, sidebar);
      for (const [display, term] of entries) {
        const item = el("li", { "data-term": term }, list);
        item.textContent = display;
        item.addEventListener("click", () => {
          highlight(term);
          select(term);
        });
      }
    }
    const plain = (names) => names.map((n) => [n, n]);
    termList(`Top ${catA}`, plain(payload.top_terms[catA] ?? []));
    termList(`Top ${catB}`, plain(payload.top_terms[catB] ?? []));
    if (payload.similar_terms) {
      for (const cat of [catA, catB]) {
        const pairs = payload.similar_terms[cat] ?? [];
        termList(
          `Similar (${cat})`,
          pairs.map(([term, value]) => [`${term} (${value.toFixed(3)})`, term])
        );
      }
    }
    function highlight(term) {
      if (term !== null && !byTerm.has(term)) return;
      if (state.hovered !== null) circles.get(state.hovered)?.classList.remove("ts-hot");
      state.hovered = term;
      if (term === null) return;
      circles.get(term)?.classList.add("ts-hot");
      const point = byTerm.get(term);
      tooltip.textContent = tooltipText(point, catA, catB);
    }
    function select(term) {
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
    function setMode(name) {
      state.mode = name;
      for (const [other, button] of buttons) {
        button.className = other === name ? "active" : "";
      }
      for (const [term, circle] of circles) {
        circle.setAttribute("fill", pointColor(byTerm.get(term), name, meta, externalScale));
      }
    }
    setMode("association");
    return state;
  }
  function boot() {
    const dataNode = document.getElementById("termscape-data");
    const root = document.getElementById("termscape-root");
    const banner = document.getElementById("termscape-error");
    if (!dataNode || !root || !banner) return null;
    const fail = (message) => {
      banner.textContent = `termscape: ${message}`;
      banner.style.display = "block";
      return null;
    };
    let parsed;
    try {
      parsed = JSON.parse(dataNode.textContent ?? "");
    } catch {
      return fail("payload is not valid JSON");
    }
    const problem = schemaProblem(parsed);
    if (problem !== null) return fail(problem);
    return render(root, parsed);
  }

  // src/main.ts
  boot();
})();
