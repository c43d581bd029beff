// Exact rationals on bigint, plus comparisons against the service's exact
// values (rational + optional quadratic surd). The slider produces k/1000
// fractions, so segment lookup stays exact end to end.

export interface Rat {
  n: bigint;
  d: bigint; // always > 0
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export function rat(n: bigint | number, d: bigint | number = 1n): Rat {
  let nn = BigInt(n);
  let dd = BigInt(d);
  if (dd === 0n) throw new Error('zero denominator');
  if (dd < 0n) {
    nn = -nn;
    dd = -dd;
  }
  const g = gcd(nn, dd) || 1n;
  return { n: nn / g, d: dd / g };
}

export function parseRat(text: string): Rat {
  const m = text.trim().match(/^(-?\d+)(?:\s*\/\s*(\d+))?$/);
  if (!m) throw new Error(`not a rational: "${text}"`);
  return rat(BigInt(m[1]), m[2] ? BigInt(m[2]) : 1n);
}

export function ratStr(x: Rat): string {
  return x.d === 1n ? x.n.toString() : `${x.n}/${x.d}`;
}

export function ratNum(x: Rat): number {
  return Number(x.n) / Number(x.d);
}

export function add(a: Rat, b: Rat): Rat {
  return rat(a.n * b.d + b.n * a.d, a.d * b.d);
}

export function sub(a: Rat, b: Rat): Rat {
  return rat(a.n * b.d - b.n * a.d, a.d * b.d);
}

export function mul(a: Rat, b: Rat): Rat {
  return rat(a.n * b.n, a.d * b.d);
}

export function cmp(a: Rat, b: Rat): number {
  const lhs = a.n * b.d;
  const rhs = b.n * a.d;
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

export function evalPoly(coeffs: Rat[], x: Rat): Rat {
  let acc = coeffs[coeffs.length - 1];
  for (let i = coeffs.length - 2; i >= 0; i--) {
    acc = add(mul(acc, x), coeffs[i]);
  }
  return acc;
}

// exact value as the service encodes it: rational + q*sqrt(d) (d square-free)
export interface ExactValue {
  rational: string;
  surd: { q: string; d: number } | null;
}

export function exactNum(v: ExactValue): number {
  let out = ratNum(parseRat(v.rational));
  if (v.surd) out += ratNum(parseRat(v.surd.q)) * Math.sqrt(v.surd.d);
  return out;
}

const sign = (x: Rat): number => (x.n < 0n ? -1 : x.n > 0n ? 1 : 0);

/** Exact sign of x - (r + q*sqrt(d)). */
export function cmpExact(x: Rat, v: ExactValue): number {
  const t = sub(x, parseRat(v.rational));
  if (!v.surd) return sign(t);
  const q = parseRat(v.surd.q);
  const sq = sign(q);
  if (sq === 0) return sign(t);
  const st = sign(t);
  if (st !== sq) return st === 0 ? -sq : st;
  // same nonzero sign: compare t^2 against q^2 * d
  const c = cmp(mul(t, t), mul(mul(q, q), rat(BigInt(v.surd.d))));
  return st > 0 ? c : -c;
}
