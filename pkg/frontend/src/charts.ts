/** Minimal SVG builders.  Inputs are plain grids (mostly service-supplied);
 * these functions only choose pixels, never values. */

export interface Extent {
  min: number;
  max: number;
}

export function extent(values: number[], pad = 0): Extent {
  let min = Infinity;
  let max = -Infinity;
  for (const v of values) {
    if (v < min) min = v;
    if (v > max) max = v;
  }
  if (!Number.isFinite(min)) return { min: 0, max: 1 };
  if (min === max) {
    min -= 0.5;
    max += 0.5;
  }
  const span = max - min;
  return { min: min - pad * span, max: max + pad * span };
}

export interface Frame {
  width: number;
  height: number;
  x: Extent;
  y: Extent;
}

export function toPx(frame: Frame, x: number, y: number): [number, number] {
  const px = ((x - frame.x.min) / (frame.x.max - frame.x.min)) * frame.width;
  const py = frame.height - ((y - frame.y.min) / (frame.y.max - frame.y.min)) * frame.height;
  return [px, py];
}

export function linePath(frame: Frame, xs: number[], ys: number[]): string {
  const parts: string[] = [];
  for (let i = 0; i < xs.length; i++) {
    const [px, py] = toPx(frame, xs[i]!, ys[i]!);
    parts.push(`${i === 0 ? "M" : "L"}${px.toFixed(2)},${py.toFixed(2)}`);
  }
  return parts.join(" ");
}

export function verticalMarker(frame: Frame, x: number): string {
  const [px] = toPx(frame, x, frame.y.min);
  return `M${px.toFixed(2)},0 L${px.toFixed(2)},${frame.height}`;
}

export interface StackedSegment {
  label: string;
  value: number;
  color: string;
}

/** One horizontal stacked bar (used for the rejection-probability split). */
export function stackedBar(
  segments: StackedSegment[],
  width: number,
  height: number,
): { x: number; w: number; color: string; label: string }[] {
  const total = segments.reduce((acc, s) => acc + s.value, 0);
  if (total <= 0) return [];
  let x = 0;
  return segments.map((s) => {
    const w = (s.value / total) * width;
    const out = { x, w, color: s.color, label: s.label };
    x += w;
    return out;
  });
}

export function svg(frame: Frame, inner: string): string {
  return (
    `<svg viewBox="0 0 ${frame.width} ${frame.height}" ` +
    `preserveAspectRatio="none" xmlns="http://www.w3.org/2000/svg">${inner}</svg>`
  );
}
