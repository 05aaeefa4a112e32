/**
 * Minimal deterministic SVG document builder.
 *
 * Everything is plain string assembly with fixed two-decimal coordinates;
 * rendering the same data twice yields byte-identical files.
 */

import { Scale, tickLabel } from "./scales.js";

export const WIDTH = 840;
export const HEIGHT = 520;
export const MARGIN = { top: 48, right: 24, bottom: 56, left: 72 };

export const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

export function px(value: number): string {
  return value.toFixed(2);
}

export function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export class SvgDoc {
  private parts: string[] = [];

  add(fragment: string): void {
    this.parts.push(fragment);
  }

  line(x1: number, y1: number, x2: number, y2: number, style: string): void {
    this.add(
      `<line x1="${px(x1)}" y1="${px(y1)}" x2="${px(x2)}" y2="${px(y2)}" ${style}/>`
    );
  }

  polyline(points: Array<[number, number]>, style: string): void {
    const attr = points.map(([x, y]) => `${px(x)},${px(y)}`).join(" ");
    this.add(`<polyline fill="none" points="${attr}" ${style}/>`);
  }

  text(x: number, y: number, content: string, style = ""): void {
    this.add(`<text x="${px(x)}" y="${px(y)}" ${style}>${esc(content)}</text>`);
  }

  render(title: string): string {
    return [
      `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${HEIGHT}" ` +
        `font-family="Helvetica, Arial, sans-serif" font-size="13">`,
      `<rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>`,
      `<text x="${px(WIDTH / 2)}" y="24" text-anchor="middle" font-size="16">${esc(title)}</text>`,
      ...this.parts,
      "</svg>",
      "",
    ].join("\n");
  }
}

export interface Frame {
  doc: SvgDoc;
  xScale: Scale;
  yScale: Scale;
}

/** Axes, ticks, labels, and the plot frame. */
export function drawFrame(
  doc: SvgDoc,
  xScale: Scale,
  yScale: Scale,
  xLabel: string,
  yLabel: string
): void {
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right;
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  const axis = 'stroke="#303030" stroke-width="1"';
  doc.line(x0, y0, x1, y0, axis);
  doc.line(x0, y0, x0, y1, axis);
  for (const t of xScale.ticks()) {
    const x = xScale(t);
    doc.line(x, y0, x, y0 + 5, axis);
    doc.text(x, y0 + 20, tickLabel(t), 'text-anchor="middle"');
  }
  for (const t of yScale.ticks()) {
    const y = yScale(t);
    doc.line(x0 - 5, y, x0, y, axis);
    doc.text(x0 - 8, y + 4, tickLabel(t), 'text-anchor="end"');
  }
  doc.text(
    (x0 + x1) / 2,
    HEIGHT - 14,
    xLabel,
    'text-anchor="middle" font-size="14"'
  );
  doc.add(
    `<text x="20" y="${px((y0 + y1) / 2)}" text-anchor="middle" font-size="14" ` +
      `transform="rotate(-90 20 ${px((y0 + y1) / 2)})">${esc(yLabel)}</text>`
  );
}

export function plotArea(): { x: [number, number]; y: [number, number] } {
  return {
    x: [MARGIN.left, WIDTH - MARGIN.right],
    y: [HEIGHT - MARGIN.bottom, MARGIN.top],
  };
}
