/**
 * Parsers for the simulator's documented output files.
 *
 * Inputs are validated strictly: a wrong header, a malformed row, or an
 * empty body is a SchemaError, so the renderers never draw from partially
 * understood data.
 */

export class SchemaError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SchemaError";
  }
}

export interface OutcomeSeries {
  x: number[];
  probability: number[];
}

export interface TruncationSeries {
  ne: number;
  tauOverFull: number[];
  value: number[];
}

export interface ShorReport {
  n: number;
  a: number;
  mode: string;
  n1: number;
  period: number | null;
  peakCenters: number[];
  factors: number[] | null;
}

function splitRows(text: string, path: string): string[][] {
  const lines = text.split(/\r?\n/).filter((line) => line.trim() !== "");
  if (lines.length === 0) {
    throw new SchemaError(`${path}: file is empty`);
  }
  return lines.map((line) => line.split(","));
}

function parseNumber(token: string, path: string, line: number): number {
  const value = Number(token);
  if (token.trim() === "" || Number.isNaN(value)) {
    throw new SchemaError(`${path}: line ${line}: not a number: '${token}'`);
  }
  return value;
}

/** Register-distribution CSV with columns x,probability. */
export function parseOutcomeCsv(text: string, path = "<input>"): OutcomeSeries {
  const rows = splitRows(text, path);
  const header = rows[0].map((h) => h.trim());
  if (header.length !== 2 || header[0] !== "x" || header[1] !== "probability") {
    throw new SchemaError(
      `${path}: expected header 'x,probability', got '${rows[0].join(",")}'`
    );
  }
  if (rows.length < 2) {
    throw new SchemaError(`${path}: no data rows`);
  }
  const x: number[] = [];
  const probability: number[] = [];
  rows.slice(1).forEach((row, i) => {
    if (row.length !== 2) {
      throw new SchemaError(`${path}: line ${i + 2}: expected 2 columns, got ${row.length}`);
    }
    const xi = parseNumber(row[0], path, i + 2);
    const pi = parseNumber(row[1], path, i + 2);
    if (!Number.isInteger(xi) || xi < 0) {
      throw new SchemaError(`${path}: line ${i + 2}: x must be a nonnegative integer`);
    }
    if (pi < 0 || !Number.isFinite(pi)) {
      throw new SchemaError(`${path}: line ${i + 2}: probability out of range`);
    }
    x.push(xi);
    probability.push(pi);
  });
  return { x, probability };
}

/** Truncation-sweep CSV with columns ne,tau_over_full,value. */
export function parseTruncationCsv(text: string, path = "<input>"): TruncationSeries[] {
  const rows = splitRows(text, path);
  const header = rows[0].map((h) => h.trim());
  if (
    header.length !== 3 ||
    header[0] !== "ne" ||
    header[1] !== "tau_over_full" ||
    header[2] !== "value"
  ) {
    throw new SchemaError(
      `${path}: expected header 'ne,tau_over_full,value', got '${rows[0].join(",")}'`
    );
  }
  if (rows.length < 2) {
    throw new SchemaError(`${path}: no data rows`);
  }
  const byNe = new Map<number, TruncationSeries>();
  rows.slice(1).forEach((row, i) => {
    if (row.length !== 3) {
      throw new SchemaError(`${path}: line ${i + 2}: expected 3 columns, got ${row.length}`);
    }
    const ne = parseNumber(row[0], path, i + 2);
    const tau = parseNumber(row[1], path, i + 2);
    const value = parseNumber(row[2], path, i + 2);
    if (!Number.isInteger(ne) || ne < 1) {
      throw new SchemaError(`${path}: line ${i + 2}: ne must be a positive integer`);
    }
    if (tau <= 0 || tau > 1 + 1e-12) {
      throw new SchemaError(`${path}: line ${i + 2}: tau_over_full outside (0, 1]`);
    }
    let series = byNe.get(ne);
    if (!series) {
      series = { ne, tauOverFull: [], value: [] };
      byNe.set(ne, series);
    }
    series.tauOverFull.push(tau);
    series.value.push(value);
  });
  return [...byNe.values()].sort((a, b) => a.ne - b.ne);
}

/** Factoring-run report JSON (subset needed for figure annotation). */
export function parseShorReport(text: string, path = "<input>"): ShorReport {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (err) {
    throw new SchemaError(`${path}: not valid JSON: ${(err as Error).message}`);
  }
  if (typeof raw !== "object" || raw === null) {
    throw new SchemaError(`${path}: report must be a JSON object`);
  }
  const obj = raw as Record<string, unknown>;
  for (const key of ["n", "a", "mode", "n1"]) {
    if (!(key in obj)) {
      throw new SchemaError(`${path}: report is missing key '${key}'`);
    }
  }
  const period = obj.period ?? null;
  if (period !== null && (!Number.isInteger(period) || (period as number) < 1)) {
    throw new SchemaError(`${path}: period must be a positive integer or null`);
  }
  const centers = Array.isArray(obj.peak_centers) ? (obj.peak_centers as number[]) : [];
  const factors = Array.isArray(obj.factors) ? (obj.factors as number[]) : null;
  return {
    n: obj.n as number,
    a: obj.a as number,
    mode: String(obj.mode),
    n1: obj.n1 as number,
    period: period as number | null,
    peakCenters: centers,
    factors,
  };
}
