/** Payload contract: the JSON block a termscape report embeds. */

export const SCHEMA = "termscape-payload/1";

export interface FontMetrics {
  glyph_width: number;
  line_height: number;
  point_radius: number;
  label_offset: number;
}

export interface Metadata {
  categories: [string, string];
  min_count: number;
  min_pmi: number;
  phi_mode: string;
  pmi_log_base: number;
  alpha: number;
  significance_level: number;
  chart: { width: number; height: number };
  font_metrics: FontMetrics;
  slot_order: string[];
  color_stops: string[];
  similarity_color_stops: string[];
  zero_score_color: string;
  document_counts: [number, number];
  word_counts: [number, number];
  bigram_counts: [number, number];
  skipped_documents: number;
  query?: string;
}

export interface Point {
  term: string;
  x_a: number;
  x_b: number;
  s_a: number;
  s_b: number;
  assoc_a: number;
  assoc_b: number;
  color: number;
  freq_a: number;
  freq_b: number;
  doc_freq_a: number;
  doc_freq_b: number;
  z: number;
  p: number;
  similarity?: number;
  external_score?: number;
}

export interface Label {
  term: string;
  slot: string;
  x_min: number;
  y_min: number;
  x_max: number;
  y_max: number;
}

export interface Excerpt {
  doc: string;
  category: string;
  text: string;
}

export interface Payload {
  schema: string;
  metadata: Metadata;
  points: Point[];
  labels: Label[];
  top_terms: Record<string, string[]>;
  excerpts: Record<string, Excerpt[]>;
  similar_terms?: Record<string, [string, number][]>;
}

/**
 * Structural gate run before any DOM is written. Returns an error message
 * (for the banner) or null when the payload is usable. Deep numeric
 * validation stays in the core; this guard only rules out rendering from
 * a wrong or mangled document.
 */
export function schemaProblem(payload: unknown): string | null {
  if (payload === null || typeof payload !== "object") {
    return "payload is not an object";
  }
  const p = payload as Record<string, unknown>;
  if (p.schema !== SCHEMA) {
    return (
      `unsupported payload schema ${JSON.stringify(p.schema ?? "(missing)")}; ` +
      `this viewer expects ${JSON.stringify(SCHEMA)}`
    );
  }
  if (!Array.isArray(p.points)) return "payload has no points array";
  if (!Array.isArray(p.labels)) return "payload has no labels array";
  const meta = p.metadata as Record<string, unknown> | undefined;
  if (!meta || typeof meta !== "object") return "payload has no metadata";
  if (!Array.isArray(meta.categories) || meta.categories.length !== 2) {
    return "metadata.categories must name two categories";
  }
  const chart = meta.chart as Record<string, unknown> | undefined;
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
