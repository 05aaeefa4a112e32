/**
 * Command line: render one figure from the simulator's output files.
 *
 *   harmoniq-figures --kind shor_hist   --input hist.csv  --out fig.svg [--report report.json]
 *   harmoniq-figures --kind shor_zoom   --input hist.csv  --report report.json --kappa 3 --out fig.svg
 *   harmoniq-figures --kind trunc_delta --input delta.csv --out fig.svg
 *   harmoniq-figures --kind trunc_ratio --input ratio.csv --out fig.svg
 *
 * Exit codes: 0 rendered, 1 schema/content failure (no file written),
 * 2 usage error.
 */

import { readFileSync, writeFileSync } from "node:fs";

import {
  SchemaError,
  parseOutcomeCsv,
  parseShorReport,
  parseTruncationCsv,
} from "./csv.js";
import {
  renderShorHistogram,
  renderShorZoom,
  renderTruncationDelta,
  renderTruncationRatio,
} from "./figures.js";

export type FigureKind = "shor_hist" | "shor_zoom" | "trunc_delta" | "trunc_ratio";

export interface FigureSpec {
  kind: FigureKind;
  inputPath: string;
  outputPath: string;
  reportPath?: string;
  kappa?: number;
}

const KINDS: FigureKind[] = ["shor_hist", "shor_zoom", "trunc_delta", "trunc_ratio"];

export function parseArgs(argv: string[]): FigureSpec {
  const opts = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      throw new UsageError(`malformed arguments near '${flag}'`);
    }
    opts.set(flag.slice(2), value);
  }
  const kind = opts.get("kind") as FigureKind | undefined;
  if (!kind || !KINDS.includes(kind)) {
    throw new UsageError(`--kind must be one of ${KINDS.join(", ")}`);
  }
  const inputPath = opts.get("input");
  const outputPath = opts.get("out");
  if (!inputPath || !outputPath) {
    throw new UsageError("--input and --out are required");
  }
  const spec: FigureSpec = { kind, inputPath, outputPath };
  if (opts.has("report")) {
    spec.reportPath = opts.get("report");
  }
  if (opts.has("kappa")) {
    const kappa = Number(opts.get("kappa"));
    if (!Number.isInteger(kappa) || kappa < 0) {
      throw new UsageError("--kappa must be a nonnegative integer");
    }
    spec.kappa = kappa;
  }
  if (kind === "shor_zoom" && (spec.reportPath === undefined || spec.kappa === undefined)) {
    throw new UsageError("shor_zoom needs --report and --kappa");
  }
  return spec;
}

export class UsageError extends Error {}

export function render(spec: FigureSpec): string {
  const body = readFileSync(spec.inputPath, "utf8");
  switch (spec.kind) {
    case "shor_hist": {
      const series = parseOutcomeCsv(body, spec.inputPath);
      const report = spec.reportPath
        ? parseShorReport(readFileSync(spec.reportPath, "utf8"), spec.reportPath)
        : undefined;
      return renderShorHistogram(series, report);
    }
    case "shor_zoom": {
      const series = parseOutcomeCsv(body, spec.inputPath);
      const report = parseShorReport(
        readFileSync(spec.reportPath as string, "utf8"),
        spec.reportPath as string
      );
      return renderShorZoom(series, report, spec.kappa as number);
    }
    case "trunc_delta":
      return renderTruncationDelta(parseTruncationCsv(body, spec.inputPath));
    case "trunc_ratio":
      return renderTruncationRatio(parseTruncationCsv(body, spec.inputPath));
  }
}

export function main(argv: string[]): number {
  let spec: FigureSpec;
  try {
    spec = parseArgs(argv);
  } catch (err) {
    if (err instanceof UsageError) {
      process.stderr.write(`usage error: ${err.message}\n`);
      return 2;
    }
    throw err;
  }
  try {
    const svg = render(spec);
    writeFileSync(spec.outputPath, svg);
    process.stdout.write(`wrote ${spec.outputPath}\n`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError || (err as NodeJS.ErrnoException).code === "ENOENT") {
      process.stderr.write(`error: ${(err as Error).message}\n`);
      return 1;
    }
    throw err;
  }
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
