/** Color ramp math, mirroring the core bit for bit.
 *
 * The stops arrive in the payload, so the viewer never hardcodes a
 * palette; interpolation is piecewise-linear in sRGB between equally
 * spaced stops, exactly as the core computes marker colors.
 */

import type { Metadata, Point } from "./payload";

export function hexToRgb(hex: string): [number, number, number] {
  return [
    parseInt(hex.slice(1, 3), 16),
    parseInt(hex.slice(3, 5), 16),
    parseInt(hex.slice(5, 7), 16),
  ];
}

export function rgbToHex(rgb: [number, number, number]): string {
  let out = "#";
  for (const channel of rgb) {
    out += Math.round(channel).toString(16).padStart(2, "0");
  }
  return out;
}

export function interpolateStops(stops: readonly string[], t: number): string {
  const clamped = Math.min(Math.max(t, 0), 1);
  const span = stops.length - 1;
  const idx = Math.min(Math.floor(clamped * span), span - 1);
  const local = clamped * span - idx;
  const lo = hexToRgb(stops[idx]!);
  const hi = hexToRgb(stops[idx + 1]!);
  return rgbToHex([
    lo[0] + (hi[0] - lo[0]) * local,
    lo[1] + (hi[1] - lo[1]) * local,
    lo[2] + (hi[2] - lo[2]) * local,
  ]);
}

export type ColorMode = "association" | "similarity" | "external";

export function pointColor(
  point: Point,
  mode: ColorMode,
  meta: Metadata,
  externalScale: number,
): string {
  if (mode === "similarity") {
    const s = point.similarity;
    if (s === undefined) return meta.zero_score_color;
    return interpolateStops(meta.similarity_color_stops, Math.max(s, 0));
  }
  if (mode === "external") {
    const e = point.external_score;
    if (e === undefined || e === 0) return meta.zero_score_color;
    const v = externalScale > 0 ? e / externalScale : 0;
    return interpolateStops(meta.color_stops, (v + 1) / 2);
  }
  return interpolateStops(meta.color_stops, (point.color + 1) / 2);
}
