/**
 * Minimal deterministic SVG scene builder: linear scales, axes with tick
 * labels, polylines, histogram bars, scatter dots. Numbers are always
 * written through one fixed formatter so identical inputs yield identical
 * bytes.
 */
export function fmt(x) {
    if (!Number.isFinite(x))
        return "0";
    const s = x.toPrecision(6);
    return s.includes(".") || s.includes("e")
        ? s.replace(/\.?0+($|e)/, "$1")
        : s;
}
export function linear(domain, range) {
    const [d0, d1] = domain;
    const [r0, r1] = range;
    const span = d1 - d0 || 1;
    const f = ((x) => r0 + ((x - d0) / span) * (r1 - r0));
    f.domain = domain;
    f.range = range;
    return f;
}
export function ticks(lo, hi, n = 5) {
    if (!(hi > lo))
        return [lo];
    const step = Math.pow(10, Math.floor(Math.log10((hi - lo) / n)));
    const candidates = [step, 2 * step, 5 * step, 10 * step];
    const pick = candidates.find((s) => (hi - lo) / s <= n) ?? 10 * step;
    const out = [];
    for (let t = Math.ceil(lo / pick) * pick; t <= hi + pick * 1e-9; t += pick) {
        out.push(Math.abs(t) < pick * 1e-9 ? 0 : t);
    }
    return out;
}
export class Svg {
    width;
    height;
    parts = [];
    constructor(width, height) {
        this.width = width;
        this.height = height;
    }
    raw(s) {
        this.parts.push(s);
    }
    line(x1, y1, x2, y2, stroke, extra = "") {
        this.parts.push(`<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="${stroke}" ${extra}/>`);
    }
    polyline(pts, stroke, extra = "") {
        const d = pts.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
        this.parts.push(`<polyline points="${d}" fill="none" stroke="${stroke}" ${extra}/>`);
    }
    rect(x, y, w, h, fill) {
        this.parts.push(`<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" height="${fmt(h)}" fill="${fill}"/>`);
    }
    circle(x, y, r, fill) {
        this.parts.push(`<circle cx="${fmt(x)}" cy="${fmt(y)}" r="${fmt(r)}" fill="${fill}"/>`);
    }
    text(x, y, s, size = 10, anchor = "middle") {
        const esc = s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
        this.parts.push(`<text x="${fmt(x)}" y="${fmt(y)}" font-size="${size}" font-family="sans-serif" text-anchor="${anchor}">${esc}</text>`);
    }
    render() {
        return (`<svg xmlns="http://www.w3.org/2000/svg" width="${this.width}" height="${this.height}" ` +
            `viewBox="0 0 ${this.width} ${this.height}">\n<rect width="100%" height="100%" fill="white"/>\n` +
            this.parts.join("\n") +
            "\n</svg>\n");
    }
}
/** Draw a plot frame with tick labels inside the given pixel box. */
export function frame(svg, box, xdom, ydom, title = "") {
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
    if (title)
        svg.text(box.left + box.width / 2, box.top - 4, title, 10);
    return { x, y };
}
/** Equal-width histogram normalized to unit mass (density scale). */
export function histogram(values, bins) {
    const lo = Math.min(...values);
    const hi = Math.max(...values);
    const span = hi - lo || 1;
    const w = span / bins;
    const counts = new Array(bins).fill(0);
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
