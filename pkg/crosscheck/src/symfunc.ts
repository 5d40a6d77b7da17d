/**
 * Exact symmetric-function bookkeeping in the h basis.
 *
 * Enumerative generators (tableaux, plane partitions, strip chains)
 * produce monomial coefficients.  A homogeneous degree-d component in
 * n >= d variables determines its h expansion uniquely, so we recover
 * h coefficients by solving the square transition system exactly.
 */

import { solveLinear } from "./fraction";
import { Partition, fromKey, key, partitionsOf, termCompare } from "./partitions";

/** coefficient map: partition key -> integer coefficient */
export type HExpansion = Map<string, bigint>;

export function addInto(map: Map<string, bigint>, k: string, delta: bigint): void {
  const next = (map.get(k) ?? 0n) + delta;
  if (next === 0n) map.delete(k);
  else map.set(k, next);
}

/** Strip trailing zeros; null unless the vector is a padded partition. */
export function contentPartition(counts: readonly number[]): Partition | null {
  let end = counts.length;
  while (end > 0 && counts[end - 1] === 0) end--;
  const head = counts.slice(0, end);
  for (let i = 0; i < head.length; i++) {
    if (head[i] <= 0) return null;
    if (i > 0 && head[i] > head[i - 1]) return null;
  }
  return head;
}

const compositionCache = new Map<string, number[][]>();

/** All ways to write total as an ordered sum of n nonnegative integers. */
export function compositions(total: number, n: number): number[][] {
  const cacheKey = `${total}|${n}`;
  const hit = compositionCache.get(cacheKey);
  if (hit) return hit;
  let out: number[][];
  if (n === 1) {
    out = [[total]];
  } else {
    out = [];
    for (let first = 0; first <= total; first++) {
      for (const rest of compositions(total - first, n - 1)) {
        out.push([first, ...rest]);
      }
    }
  }
  compositionCache.set(cacheKey, out);
  return out;
}

const hTableCache = new Map<string, Map<string, bigint>>();

/**
 * Monomial coefficients of h_mu in n variables: the coefficient of
 * x^alpha counts nonnegative integer matrices with row sums mu and
 * column sums alpha.  Keys are full length-n count vectors.
 */
export function hMonomialTable(mu: Partition, n: number): Map<string, bigint> {
  const cacheKey = `${key(mu)}|${n}`;
  const hit = hTableCache.get(cacheKey);
  if (hit) return hit;
  let states = new Map<string, bigint>([[Array(n).fill(0).join(","), 1n]]);
  for (const part of mu) {
    const next = new Map<string, bigint>();
    for (const [stateKey, count] of states) {
      const counts = stateKey.split(",").map(Number);
      for (const comp of compositions(part, n)) {
        const merged = counts.map((c, i) => c + comp[i]);
        addInto(next, merged.join(","), count);
      }
    }
    states = next;
  }
  hTableCache.set(cacheKey, states);
  return states;
}

function padKey(lam: Partition, n: number): string {
  return [...lam, ...Array(n - lam.length).fill(0)].join(",");
}

/**
 * Recover the h expansion of a homogeneous degree-d symmetric function
 * from its monomial coefficients in n >= d variables.  coeff(lam) must
 * return the coefficient of x^lam (lam padded with zeros).
 */
export function monomialToH(
  d: number,
  n: number,
  coeff: (lam: Partition) => bigint,
): HExpansion {
  if (n < d) throw new Error(`need at least ${d} variables, got ${n}`);
  const basis = partitionsOf(d);
  const tables = basis.map((mu) => hMonomialTable(mu, n));
  const a = basis.map((lam) => {
    const target = padKey(lam, n);
    return tables.map((table) => table.get(target) ?? 0n);
  });
  const b = basis.map((lam) => coeff(lam));
  const solved = solveLinear(a, b);
  const out: HExpansion = new Map();
  basis.forEach((mu, j) => {
    const value = solved[j].toBigInt();
    if (value !== 0n) out.set(key(mu), value);
  });
  return out;
}

/** Evaluate an h expansion back to monomial coefficients, for checks. */
export function hExpansionCoefficient(
  h: HExpansion,
  lam: Partition,
  n: number,
): bigint {
  const target = padKey(lam, n);
  let total = 0n;
  for (const [muKey, c] of h) {
    const table = hMonomialTable(fromKey(muKey), n);
    total += c * (table.get(target) ?? 0n);
  }
  return total;
}

export interface SymTerm {
  partition: number[];
  coeff: string;
}

export interface SymJson {
  basis: "h";
  terms: SymTerm[];
}

/** Serialize in the main library's schema: degree-major term order,
 *  string coefficients, no zero terms. */
export function hToJson(h: HExpansion): SymJson {
  const entries = [...h.entries()]
    .filter(([, c]) => c !== 0n)
    .map(([k, c]) => ({ partition: fromKey(k), coeff: c.toString() }));
  entries.sort((x, y) => termCompare(x.partition, y.partition));
  return { basis: "h", terms: entries };
}

/** Merge graded pieces into one expansion. */
export function mergeExpansions(pieces: HExpansion[]): HExpansion {
  const out: HExpansion = new Map();
  for (const piece of pieces) {
    for (const [k, c] of piece) addInto(out, k, c);
  }
  return out;
}
