/**
 * Minimal deterministic SVG scene builder: linear scales, axes with tick
 * labels, polylines, histogram bars, scatter dots. Numbers are always
 * written through one fixed formatter so identical inputs yield identical
 * bytes.
 */

export function fmt(x: number): string {
  if (!Number.isFinite(x)) return "0";
  const s = x.toPrecision(6);
  return s.includes(".") || s.includes("e")
    ? s.replace(/\.?0+($|e)/, "$1")
    : s;
}

export interface Scale {
  (x: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linear(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const f = ((x: number) => r0 + ((x - d0) / span) * (r1 - r0)) as Scale;
  f.domain = domain;
  f.range = range;
  return f;
}

export function ticks(lo: number, hi: number, n = 5): number[] {
  if (!(hi > lo)) return [lo];
  const step = Math.pow(10, Math.floor(Math.log10((hi - lo) / n)));
  const candidates = [step, 2 * step, 5 * step, 10 * step];
  const pick = candidates.find((s) => (hi - lo) / s <= n) ?? 10 * step;
  const out: number[] = [];
  for (let t = Math.ceil(lo / pick) * pick; t <= hi + pick * 1e-9; t += pick) {
    out.push(Math.abs(t) < pick * 1e-9 ? 0 : t);
  }
  return out;
}

export class Svg {
  private parts: string[] = [];

  constructor(readonly width: number, readonly height: number) {}

  raw(s: string): void {
    this.parts.push(s);
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke: string, extra = ""): void {
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="${stroke}" ${extra}/>`,
    );
  }

  polyline(pts: Array<[number, number]>, stroke: string, extra = ""): void {
    const d = pts.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    this.parts.push(
      `<polyline points="${d}" fill="none" stroke="${stroke}" ${extra}/>`,
    );
  }

  rect(x: number, y: number, w: number, h: number, fill: string): void {
    this.parts.push(
      `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" height="${fmt(h)}" fill="${fill}"/>`,
    );
  }

  circle(x: number, y: number, r: number, fill: string): void {
    this.parts.push(`<circle cx="${fmt(x)}" cy="${fmt(y)}" r="${fmt(r)}" fill="${fill}"/>`);
  }

  text(x: number, y: number, s: string, size = 10, anchor = "middle"): void {
    const esc = s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}" font-size="${size}" font-family="sans-serif" text-anchor="${anchor}">${esc}</text>`,
    );
  }

  render(): string {
    return (
      `<svg xmlns="http://www.w3.org/2000/svg" width="${this.width}" height="${this.height}" ` +
      `viewBox="0 0 ${this.width} ${this.height}">\n<rect width="100%" height="100%" fill="white"/>\n` +
      this.parts.join("\n") +
      "\n</svg>\n"
    );
  }
}

export interface Frame {
  x: Scale;
  y: Scale;
}

/** Draw a plot frame with tick labels inside the given pixel box. */
export function frame(
  svg: Svg,
  box: { left: number; top: number; width: number; height: number },
  xdom: [number, number],
  ydom: [number, number],
  title = "",
): Frame {
  const x = linear(xdom, [box.left, box.left + box.width]);
  const y = linear(ydom, [box.top + box.height, box.top]);
  svg.line(box.left, box.top + box.height, box.left + box.width, box.top + box.height, "black");
  svg.line(box.left, box.top, box.left, box.top + box.height, "black");
  for (const t of ticks(xdom[0], xdom[1])) {
    svg.line(x(t), box.top + box.height, x(t), box.top + box.height + 3, "black");
    svg.text(x(t), box.top + box.height + 13, fmt(t), 8);
  }
  for (const t of ticks(ydom[0], ydom[1])) {
    svg.line(box.left - 3, y(t), box.left, y(t), "black");
    svg.text(box.left - 5, y(t) + 3, fmt(t), 8, "end");
  }
  if (title) svg.text(box.left + box.width / 2, box.top - 4, title, 10);
  return { x, y };
}

export interface Bin {
  lo: number;
  hi: number;
  density: number;
}

/** Equal-width histogram normalized to unit mass (density scale). */
export function histogram(values: number[], bins: number): Bin[] {
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  const span = hi - lo || 1;
  const w = span / bins;
  const counts = new Array<number>(bins).fill(0);
  for (const v of values) {
    const idx = Math.min(bins - 1, Math.floor((v - lo) / w));
    counts[idx] += 1;
  }
  return counts.map((c, i) => ({
    lo: lo + i * w,
    hi: lo + (i + 1) * w,
    density: c / (values.length * w),
  }));
}
