/**
 * SVG renderers for the simulator's output files.
 *
 * The figures never recompute physics: histogram heights, peak centers, and
 * truncation values are taken verbatim from the input files, with the report
 * supplying the exact center positions for peak annotation.
 */

import {
  OutcomeSeries,
  SchemaError,
  ShorReport,
  TruncationSeries,
} from "./csv.js";
import { linearScale, logScale } from "./scales.js";
import { PALETTE, SvgDoc, drawFrame, plotArea, px } from "./svg.js";

function peakCenters(report: ShorReport, size: number): number[] {
  if (report.peakCenters.length > 0) {
    return report.peakCenters;
  }
  if (report.period) {
    const centers: number[] = [];
    for (let k = 0; k < report.period; k++) {
      centers.push((k * size) / report.period);
    }
    return centers;
  }
  return [];
}

/** Full first-register distribution with peak labels, after the transform. */
export function renderShorHistogram(series: OutcomeSeries, report?: ShorReport): string {
  const doc = new SvgDoc();
  const area = plotArea();
  const size = series.x.length;
  const pMax = Math.max(...series.probability);
  if (!(pMax > 0)) {
    throw new SchemaError("histogram has no probability mass");
  }
  const xScale = linearScale([0, Math.max(...series.x)], area.x, 8);
  const yScale = linearScale([0, pMax * 1.12], area.y, 5);
  drawFrame(doc, xScale, yScale, "first-register outcome x", "probability");
  const y0 = yScale(0);
  for (let i = 0; i < series.x.length; i++) {
    const p = series.probability[i];
    if (p <= 0) {
      continue;
    }
    const x = xScale(series.x[i]);
    doc.line(x, y0, x, yScale(p), 'stroke="#1f77b4" stroke-width="1.5"');
  }
  let title = "measurement probability by outcome";
  if (report) {
    const centers = peakCenters(report, size);
    centers.forEach((center, kappa) => {
      const x = xScale(center);
      doc.text(x, plotArea().y[1] + 12, `k=${kappa}`, 'text-anchor="middle" fill="#d62728"');
    });
    title = `post-transform distribution, n=${report.n} a=${report.a}` +
      (report.period ? ` (period ${report.period})` : "");
  }
  return doc.render(title);
}

/** Zoom on one peak with a dashed line at its exact center. */
export function renderShorZoom(
  series: OutcomeSeries,
  report: ShorReport,
  kappa: number,
  window = 6
): string {
  const size = series.x.length;
  const centers = peakCenters(report, size);
  if (centers.length === 0) {
    throw new SchemaError("report carries no period, cannot place peak centers");
  }
  if (kappa < 0 || kappa >= centers.length) {
    throw new SchemaError(
      `peak index ${kappa} outside 0..${centers.length - 1}`
    );
  }
  const center = centers[kappa];
  const lo = Math.max(0, Math.floor(center) - window);
  const hi = Math.min(size - 1, Math.ceil(center) + window);
  const doc = new SvgDoc();
  const area = plotArea();
  const xs: number[] = [];
  const ps: number[] = [];
  for (let i = 0; i < series.x.length; i++) {
    if (series.x[i] >= lo && series.x[i] <= hi) {
      xs.push(series.x[i]);
      ps.push(series.probability[i]);
    }
  }
  const pMax = Math.max(...ps, 1e-12);
  const xScale = linearScale([lo, hi], area.x, Math.min(8, hi - lo));
  const yScale = linearScale([0, pMax * 1.12], area.y, 5);
  drawFrame(doc, xScale, yScale, "first-register outcome x", "probability");
  const y0 = yScale(0);
  for (let i = 0; i < xs.length; i++) {
    const x = xScale(xs[i]);
    doc.line(x, y0, x, yScale(ps[i]), 'stroke="#1f77b4" stroke-width="6"');
  }
  const cx = xScale(center);
  doc.line(
    cx,
    area.y[0],
    cx,
    area.y[1],
    'stroke="#d62728" stroke-width="1.5" stroke-dasharray="6 4"'
  );
  doc.text(cx + 6, area.y[1] + 16, `exact center ${px(center)}`, 'fill="#d62728"');
  return doc.render(`peak k=${kappa} near x=${px(center)}`);
}

function truncationFigure(
  seriesList: TruncationSeries[],
  yKind: "log" | "linear",
  title: string,
  yLabel: string,
  floor = 1e-30
): string {
  if (seriesList.length === 0) {
    throw new SchemaError("no truncation series to draw");
  }
  const doc = new SvgDoc();
  const area = plotArea();
  const xScale = linearScale([0, 1], area.x, 5);
  let yScale;
  if (yKind === "log") {
    let lo = Number.POSITIVE_INFINITY;
    let hi = Number.NEGATIVE_INFINITY;
    for (const s of seriesList) {
      for (const v of s.value) {
        const clamped = Math.max(v, floor);
        lo = Math.min(lo, clamped);
        hi = Math.max(hi, clamped);
      }
    }
    yScale = logScale([lo, hi * 2], area.y);
  } else {
    const hi = Math.max(...seriesList.flatMap((s) => s.value));
    yScale = linearScale([0, hi * 1.1], area.y, 5);
  }
  drawFrame(doc, xScale, yScale, "cutoff / half period", yLabel);
  seriesList.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    const pts: Array<[number, number]> = [];
    for (let k = 0; k < s.tauOverFull.length; k++) {
      const v = yKind === "log" ? Math.max(s.value[k], floor) : s.value[k];
      pts.push([xScale(s.tauOverFull[k]), yScale(v)]);
    }
    doc.polyline(pts, `stroke="${color}" stroke-width="1.8"`);
    const legendY = plotArea().y[1] + 18 + i * 18;
    doc.line(area.x[1] - 130, legendY - 4, area.x[1] - 104, legendY - 4, `stroke="${color}" stroke-width="3"`);
    doc.text(area.x[1] - 98, legendY, `${s.ne} qubits`);
  });
  return doc.render(title);
}

/** Semi-log reconstruction-error curves, one per entangled-qubit count. */
export function renderTruncationDelta(seriesList: TruncationSeries[]): string {
  return truncationFigure(
    seriesList,
    "log",
    "truncated-addressing reconstruction error",
    "error"
  );
}

/** Linear-scale sine/cosine probability-ratio curves. */
export function renderTruncationRatio(seriesList: TruncationSeries[]): string {
  return truncationFigure(
    seriesList,
    "linear",
    "truncated sine/cosine probability ratio",
    "ratio"
  );
}
