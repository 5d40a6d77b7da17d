/**
 * Exact rational arithmetic on bigint, just enough for Gaussian
 * elimination.  Values are kept normalized with a positive denominator.
 */

function gcd(a: bigint, b: bigint): bigint {
  let x = a < 0n ? -a : a;
  let y = b < 0n ? -b : b;
  while (y !== 0n) {
    [x, y] = [y, x % y];
  }
  return x;
}

export class Frac {
  readonly num: bigint;
  readonly den: bigint;

  constructor(num: bigint, den: bigint = 1n) {
    if (den === 0n) throw new Error("zero denominator");
    if (den < 0n) {
      num = -num;
      den = -den;
    }
    const g = gcd(num, den);
    this.num = g === 0n ? 0n : num / g;
    this.den = g === 0n ? 1n : den / g;
  }

  static of(n: bigint | number): Frac {
    return new Frac(BigInt(n));
  }

  add(other: Frac): Frac {
    return new Frac(this.num * other.den + other.num * this.den, this.den * other.den);
  }

  sub(other: Frac): Frac {
    return new Frac(this.num * other.den - other.num * this.den, this.den * other.den);
  }

  mul(other: Frac): Frac {
    return new Frac(this.num * other.num, this.den * other.den);
  }

  div(other: Frac): Frac {
    if (other.num === 0n) throw new Error("division by zero");
    return new Frac(this.num * other.den, this.den * other.num);
  }

  isZero(): boolean {
    return this.num === 0n;
  }

  /** The value as a bigint; throws unless the fraction is integral. */
  toBigInt(): bigint {
    if (this.den !== 1n) throw new Error(`not an integer: ${this.num}/${this.den}`);
    return this.num;
  }
}

/**
 * Solve the square system A x = b exactly.  Rows of A and entries of b
 * are bigint; the result may be fractional, callers assert integrality.
 */
export function solveLinear(a: bigint[][], b: bigint[]): Frac[] {
  const n = b.length;
  const m: Frac[][] = a.map((row, i) => [...row.map((v) => new Frac(v)), new Frac(b[i])]);
  for (let col = 0; col < n; col++) {
    let pivot = -1;
    for (let row = col; row < n; row++) {
      if (!m[row][col].isZero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw new Error("singular system");
    [m[col], m[pivot]] = [m[pivot], m[col]];
    const lead = m[col][col];
    for (let j = col; j <= n; j++) m[col][j] = m[col][j].div(lead);
    for (let row = 0; row < n; row++) {
      if (row === col || m[row][col].isZero()) continue;
      const factor = m[row][col];
      for (let j = col; j <= n; j++) {
        m[row][j] = m[row][j].sub(factor.mul(m[col][j]));
      }
    }
  }
  return m.map((row) => row[n]);
}
