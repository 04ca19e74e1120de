/** Display-only curve geometry.
 *
 * The chart shapes (prior density, power curve) are drawn client-side from
 * the form parameters; no numeric readout is ever taken from these helpers,
 * so they sit outside the "all displayed numbers come from the service"
 * contract.  Quantities that carry meaning (sample sizes, EP, PoS, masses,
 * rewards, distribution quantiles) always come from /v1 responses.
 */

const INV_SQRT_2PI = 1 / Math.sqrt(2 * Math.PI);

function erf(x: number): number {
  // Abramowitz-Stegun style rational approximation, ~1e-7 absolute error:
  // far below a pixel.
  const sign = x < 0 ? -1 : 1;
  const ax = Math.abs(x);
  const t = 1 / (1 + 0.3275911 * ax);
  const y =
    1 -
    (((((1.061405429 * t - 1.453152027) * t) + 1.421413741) * t - 0.284496736) * t +
      0.254829592) *
      t *
      Math.exp(-ax * ax);
  return sign * y;
}

export function normCdf(x: number): number {
  return 0.5 * (1 + erf(x / Math.SQRT2));
}

function normPdf(x: number): number {
  return INV_SQRT_2PI * Math.exp(-0.5 * x * x);
}

export function normQuantile(p: number): number {
  // bisection on the cdf: plenty for chart markers
  let lo = -8;
  let hi = 8;
  for (let i = 0; i < 60; i++) {
    const mid = (lo + hi) / 2;
    if (normCdf(mid) < p) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

export interface Curve {
  x: number[];
  y: number[];
}

export function priorDensityCurve(
  prior: { mean: number; sd: number; lo: number; hi: number },
  cut: number | null,
  points = 201,
): Curve {
  const { mean, sd, lo, hi } = prior;
  const z = normCdf((hi - mean) / sd) - normCdf((lo - mean) / sd);
  const lower = cut === null ? lo : Math.max(cut, lo);
  const mass =
    cut === null ? 1 : (normCdf((hi - mean) / sd) - normCdf((lower - mean) / sd)) / z;
  const x: number[] = [];
  const y: number[] = [];
  for (let i = 0; i < points; i++) {
    const t = lo + ((hi - lo) * i) / (points - 1);
    x.push(t);
    if (t < lower) {
      y.push(0);
    } else {
      y.push(normPdf((t - mean) / sd) / (sd * z * mass));
    }
  }
  return { x, y };
}

export function powerCurve(
  setup: { alpha: number; theta0: number; sigma: number },
  n: number,
  lo: number,
  hi: number,
  points = 201,
): Curve {
  const zAlpha = normQuantile(1 - setup.alpha);
  const x: number[] = [];
  const y: number[] = [];
  for (let i = 0; i < points; i++) {
    const t = lo + ((hi - lo) * i) / (points - 1);
    x.push(t);
    y.push(normCdf((Math.sqrt(n) * (t - setup.theta0)) / setup.sigma - zAlpha));
  }
  return { x, y };
}
