/**
 * Figure registry: how many inputs each figure takes, which schemas they
 * must carry, and the renderer that turns them into an SVG scene. The
 * renderers draw what the tables contain (counts, curves, reference-line
 * columns sampled by the producer) and compute no mathematics of their own
 * beyond histogram binning.
 */

import { Table, TableError, column, textColumn } from "./table.js";
import { Bin, Svg, frame, histogram } from "./svg.js";

export interface FigureSpec {
  id: string;
  inputs: string[]; // expected schema per input slot
  render: (tables: Table[]) => string;
}

const COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
const PANEL = { width: 250, height: 180, padLeft: 48, padTop: 30, gapX: 30, gapY: 44 };

function panelBox(i: number, perRow: number) {
  const r = Math.floor(i / perRow);
  const c = i % perRow;
  return {
    left: PANEL.padLeft + c * (PANEL.width + PANEL.gapX),
    top: PANEL.padTop + r * (PANEL.height + PANEL.gapY),
    width: PANEL.width,
    height: PANEL.height,
  };
}

function sheet(nPanels: number, perRow: number): Svg {
  const rows = Math.ceil(nPanels / perRow);
  return new Svg(
    PANEL.padLeft + perRow * (PANEL.width + PANEL.gapX),
    PANEL.padTop + rows * (PANEL.height + PANEL.gapY),
  );
}

function drawBins(svg: Svg, f: { x: any; y: any }, bins: Bin[], color: string) {
  for (const b of bins) {
    if (b.density <= 0) continue;
    svg.rect(f.x(b.lo), f.y(b.density), f.x(b.hi) - f.x(b.lo), f.y(0) - f.y(b.density), color);
  }
}

function groupBy<T>(keys: string[], values: T[]): Map<string, T[]> {
  const out = new Map<string, T[]>();
  keys.forEach((k, i) => {
    const bucket = out.get(k) ?? [];
    bucket.push(values[i]);
    out.set(k, bucket);
  });
  return out;
}

/** Histogram panels per localization degree with the packaged density overlay. */
function renderFig1(tables: Table[]): string {
  const [eigs, overlay] = tables;
  const byA = groupBy(textColumn(eigs, "a"), column(eigs, "scaled_eigenvalue"));
  const overlayByA = groupBy(textColumn(overlay, "a"),
    column(overlay, "x").map((x, i) => [x, column(overlay, "density")[i]] as [number, number]));
  const aValues = [...byA.keys()].sort((p, q) => Number(p) - Number(q));
  const svg = sheet(aValues.length, 3);
  aValues.forEach((a, i) => {
    const vals = byA.get(a)!;
    const bins = histogram(vals, Math.max(8, Math.min(60, Math.floor(Math.sqrt(vals.length) * 1.5))));
    const curve = overlayByA.get(a) ?? [];
    const ymax = Math.max(...bins.map((b) => b.density), ...curve.map(([, d]) => d), 1e-9);
    const xlo = Math.min(...vals, ...(curve.length ? [curve[0][0]] : []));
    const xhi = Math.max(...vals, ...(curve.length ? [curve[curve.length - 1][0]] : []));
    const f = frame(svg, panelBox(i, 3), [xlo, xhi], [0, ymax * 1.05], `a = ${a}`);
    drawBins(svg, f, bins, "#9ecae1");
    if (curve.length) {
      svg.polyline(curve.map(([x, d]) => [f.x(x), f.y(d)]), COLORS[1], 'stroke-width="1.5"');
    }
  });
  return svg.render();
}

/** Per-degree scan panels of a (mean, min, max) column triple against p. */
function scanPanels(
  table: Table,
  cols: { mean: string; min: string; max: string },
  extraLine?: string,
): string {
  const a = textColumn(table, "a");
  const p = column(table, "p");
  const mean = column(table, cols.mean);
  const lo = column(table, cols.min);
  const hi = column(table, cols.max);
  const line = extraLine ? column(table, extraLine) : null;
  const degrees = [...new Set(a)].sort();
  const svg = sheet(degrees.length, 3);
  degrees.forEach((deg, i) => {
    const idx = a.map((v, j) => (v === deg ? j : -1)).filter((j) => j >= 0);
    const ymax = Math.max(...idx.map((j) => hi[j]), ...(line ? idx.map((j) => line[j]) : [0]));
    const f = frame(
      svg,
      panelBox(i, 3),
      [Math.min(...idx.map((j) => p[j])), Math.max(...idx.map((j) => p[j]))],
      [0, ymax * 1.05],
      `a = ${deg}`,
    );
    svg.polyline(idx.map((j) => [f.x(p[j]), f.y(lo[j])]), "#bbbbbb");
    svg.polyline(idx.map((j) => [f.x(p[j]), f.y(hi[j])]), "#bbbbbb");
    svg.polyline(idx.map((j) => [f.x(p[j]), f.y(mean[j])]), COLORS[0], 'stroke-width="1.2"');
    if (line) {
      svg.polyline(idx.map((j) => [f.x(p[j]), f.y(line[j])]), COLORS[1], 'stroke-dasharray="4 3"');
    }
  });
  return svg.render();
}

function renderFig2(tables: Table[]): string {
  return scanPanels(tables[0], { mean: "dist_mean", min: "dist_min", max: "dist_max" });
}

function renderFig3(tables: Table[]): string {
  return scanPanels(
    tables[0],
    { mean: "neg_min_mean", min: "neg_min_min", max: "neg_min_max" },
    "conjecture_line",
  );
}

/** Bound-comparison curves: the localized theta bound vs the two baselines. */
function renderFig4(tables: Table[]): string {
  const t = tables[0];
  const p = column(t, "p");
  const series: Array<[string, number[], string]> = [
    ["2 + theta(loc2)", column(t, "alpha_bound"), COLORS[0]],
    ["hanson-petridis", column(t, "hp_bound"), COLORS[1]],
    ["sqrt(p)", column(t, "sqrt_p"), COLORS[2]],
  ];
  const svg = sheet(1, 1);
  const ymax = Math.max(...series.flatMap(([, v]) => v));
  const f = frame(svg, panelBox(0, 1), [Math.min(...p), Math.max(...p)], [0, ymax * 1.05],
    "independence-number bounds");
  series.forEach(([label, vals, color], i) => {
    svg.polyline(p.map((x, j) => [f.x(x), f.y(vals[j])]), color, 'stroke-width="1.2"');
    svg.text(f.x.range[0] + 8, panelBox(0, 1).top + 12 + 11 * i, label, 9, "start");
    svg.line(f.x.range[0], panelBox(0, 1).top + 9 + 11 * i, f.x.range[0] + 6,
      panelBox(0, 1).top + 9 + 11 * i, color);
  });
  return svg.render();
}

/** Side-by-side spectra of the quartic subgraph and the degree-2 localization. */
function renderFig6(tables: Table[]): string {
  const [esd, overlay] = tables;
  const bySource = groupBy(textColumn(esd, "source"), column(esd, "scaled_eigenvalue"));
  const curve = column(overlay, "x").map(
    (x, i) => [x, column(overlay, "density")[i]] as [number, number]);
  const sources = [...bySource.keys()].sort();
  const svg = sheet(sources.length, 2);
  sources.forEach((src, i) => {
    const vals = bySource.get(src)!;
    const bins = histogram(vals, Math.max(8, Math.min(60, Math.floor(Math.sqrt(vals.length) * 1.5))));
    const ymax = Math.max(...bins.map((b) => b.density), ...curve.map(([, d]) => d));
    const f = frame(svg, panelBox(i, 2), [Math.min(...vals), Math.max(...vals)],
      [0, ymax * 1.05], src);
    drawBins(svg, f, bins, "#9ecae1");
    svg.polyline(curve.map(([x, d]) => [f.x(x), f.y(d)]), COLORS[1], 'stroke-width="1.5"');
  });
  return svg.render();
}

/** Quartic minimum-eigenvalue sweep with the two packaged reference lines. */
function renderFig7(tables: Table[]): string {
  const t = tables[0];
  const p = column(t, "p");
  const neg = column(t, "neg_min_eig");
  const half = column(t, "half_sqrt_p");
  const loc2 = column(t, "loc2_prediction");
  const svg = sheet(1, 1);
  const ymax = Math.max(...neg, ...half);
  const f = frame(svg, panelBox(0, 1), [Math.min(...p), Math.max(...p)], [0, ymax * 1.05],
    "quartic subgraph min eigenvalue");
  p.forEach((x, j) => svg.circle(f.x(x), f.y(neg[j]), 1.6, COLORS[0]));
  svg.polyline(p.map((x, j) => [f.x(x), f.y(half[j])]), COLORS[1], 'stroke-dasharray="4 3"');
  svg.polyline(p.map((x, j) => [f.x(x), f.y(loc2[j])]), COLORS[2], 'stroke-dasharray="2 3"');
  return svg.render();
}

export const FIGURES: Record<string, FigureSpec> = {
  fig1: { id: "fig1", inputs: ["paleylab.spectrum.v1", "paleylab.overlay.v1"], render: renderFig1 },
  fig2: { id: "fig2", inputs: ["paleylab.distance.v1"], render: renderFig2 },
  fig3: { id: "fig3", inputs: ["paleylab.mineig.v1"], render: renderFig3 },
  fig4: { id: "fig4", inputs: ["paleylab.theta.v1"], render: renderFig4 },
  fig6: { id: "fig6", inputs: ["paleylab.quartic-esd.v1", "paleylab.overlay.v1"], render: renderFig6 },
  fig7: { id: "fig7", inputs: ["paleylab.quartic-mineig.v1"], render: renderFig7 },
};

export function renderFigure(figure: string, tables: Table[]): string {
  const spec = FIGURES[figure];
  if (!spec) {
    throw new TableError(`unknown figure ${figure}; known: ${Object.keys(FIGURES).join(", ")}`);
  }
  if (tables.length !== spec.inputs.length) {
    throw new TableError(
      `${figure} needs ${spec.inputs.length} input(s) [${spec.inputs.join(", ")}], got ${tables.length}`,
    );
  }
  return spec.render(tables);
}
