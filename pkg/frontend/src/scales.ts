/** Axis scales and tick generation for the SVG renderers. */

export interface Scale {
  (value: number): number;
  ticks(): number[];
  domain: [number, number];
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
  tickCount = 6
): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const fn = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  fn.ticks = () => linearTicks(d0, d1, tickCount);
  return fn;
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  if (d0 <= 0 || d1 <= 0) {
    throw new Error(`log scale requires a positive domain, got [${d0}, ${d1}]`);
  }
  const l0 = Math.log10(d0);
  const l1 = Math.log10(d1);
  const span = l1 - l0 || 1;
  const [r0, r1] = range;
  const fn = ((value: number) =>
    r0 + ((Math.log10(value) - l0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  fn.ticks = () => decadeTicks(d0, d1);
  return fn;
}

/** Round-number ticks covering [lo, hi]. */
export function linearTicks(lo: number, hi: number, count: number): number[] {
  if (!(hi > lo)) {
    return [lo];
  }
  const rawStep = (hi - lo) / Math.max(1, count);
  const power = Math.floor(Math.log10(rawStep));
  const base = Math.pow(10, power);
  let step = base;
  for (const mult of [1, 2, 5, 10]) {
    if (base * mult >= rawStep) {
      step = base * mult;
      break;
    }
  }
  const start = Math.ceil(lo / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= hi + step * 1e-9; v += step) {
    ticks.push(Number(v.toPrecision(12)));
  }
  return ticks;
}

/** Powers of ten spanning [lo, hi], thinned to at most ~8 labels. */
export function decadeTicks(lo: number, hi: number): number[] {
  const first = Math.ceil(Math.log10(lo) - 1e-9);
  const last = Math.floor(Math.log10(hi) + 1e-9);
  const decades: number[] = [];
  for (let e = first; e <= last; e++) {
    decades.push(Math.pow(10, e));
  }
  const stride = Math.max(1, Math.ceil(decades.length / 8));
  return decades.filter((_, i) => i % stride === 0);
}

/** Compact deterministic label for tick values. */
export function tickLabel(value: number): string {
  if (value === 0) {
    return "0";
  }
  const magnitude = Math.abs(value);
  if (magnitude >= 1e4 || magnitude < 1e-3) {
    const exp = Math.floor(Math.log10(magnitude) + 1e-9);
    const mant = value / Math.pow(10, exp);
    const m = Number(mant.toPrecision(3));
    return m === 1 ? `1e${exp}` : `${m}e${exp}`;
  }
  return String(Number(value.toPrecision(6)));
}
