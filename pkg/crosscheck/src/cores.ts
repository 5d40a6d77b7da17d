/**
 * (k+1)-cores by direct hook arithmetic.  A core is a partition none of
 * whose hook lengths is divisible by k+1; the bounded partition of a
 * core counts, per row, the cells with hook length at most k.  The
 * inverse map is found by backtracking from the bottom row up, which
 * works because hook lengths in a row only look down and right.
 */

import { Partition, conjugate, isPartition, key } from "./partitions";

export function hookLength(shape: readonly number[], r: number, c: number): number {
  const arm = shape[r] - 1 - c;
  let leg = 0;
  for (let i = r + 1; i < shape.length; i++) {
    if (shape[i] > c) leg++;
  }
  return arm + leg + 1;
}

export function isCore(k: number, shape: readonly number[]): boolean {
  for (let r = 0; r < shape.length; r++) {
    for (let c = 0; c < shape[r]; c++) {
      if (hookLength(shape, r, c) % (k + 1) === 0) return false;
    }
  }
  return true;
}

/** Per-row count of cells with hook length at most k. */
export function boundedOf(k: number, shape: readonly number[]): Partition {
  const out: number[] = [];
  for (let r = 0; r < shape.length; r++) {
    let small = 0;
    for (let c = 0; c < shape[r]; c++) {
      if (hookLength(shape, r, c) <= k) small++;
    }
    if (small > 0) out.push(small);
  }
  if (!isPartition(out)) throw new Error(`bounded shape not a partition: ${out}`);
  return out;
}

const coreCache = new Map<string, Partition>();

/**
 * The unique (k+1)-core whose bounded partition is lam.  Rows are
 * chosen bottom up; each row length sits within k of the row below it
 * because cells past the row below have zero leg, so a longer overhang
 * would contain a hook of exactly k+1.
 */
export function coreOf(k: number, lam: Partition): Partition {
  if (!isPartition(lam) || lam.some((part) => part > k)) {
    throw new Error(`not ${k}-bounded: ${lam}`);
  }
  const cacheKey = `${k}|${key(lam)}`;
  const hit = coreCache.get(cacheKey);
  if (hit) return [...hit];

  const rows = lam.length;
  const shape: number[] = Array(rows).fill(0);
  const solutions: Partition[] = [];

  const rowAdmissible = (r: number): boolean => {
    let small = 0;
    for (let c = 0; c < shape[r]; c++) {
      const h = hookLength(shape.slice(r), 0, c);
      if (h % (k + 1) === 0) return false;
      if (h <= k) small++;
    }
    return small === lam[r];
  };

  const search = (r: number): void => {
    if (r < 0) {
      solutions.push([...shape]);
      return;
    }
    const below = r + 1 < rows ? shape[r + 1] : 0;
    for (let len = below; len <= below + k; len++) {
      shape[r] = len;
      if (rowAdmissible(r)) search(r - 1);
    }
    shape[r] = 0;
  };

  search(rows - 1);
  const valid = solutions.filter(
    (candidate) => isCore(k, candidate) && key(boundedOf(k, candidate)) === key(lam),
  );
  if (valid.length !== 1) {
    throw new Error(`expected one core for ${lam}, found ${valid.length}`);
  }
  coreCache.set(cacheKey, valid[0]);
  return [...valid[0]];
}

/** k-conjugation: transpose the core, then read off its bounded shape. */
export function kConjugate(k: number, lam: Partition): Partition {
  const flipped = conjugate(coreOf(k, lam));
  if (!isCore(k, flipped)) throw new Error("transpose of a core must be a core");
  return boundedOf(k, flipped);
}
