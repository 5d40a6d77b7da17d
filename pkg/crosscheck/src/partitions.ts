/**
 * Integer partitions and the term order shared with the main library.
 *
 * A partition is a weakly decreasing array of positive integers; the
 * empty partition is [].  Keys are comma-joined part lists so partitions
 * can index Map instances.
 */

export type Partition = number[];

export function isPartition(parts: readonly number[]): boolean {
  for (let i = 0; i < parts.length; i++) {
    if (!Number.isInteger(parts[i]) || parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

export function sum(lam: readonly number[]): number {
  return lam.reduce((a, b) => a + b, 0);
}

export function key(lam: readonly number[]): string {
  return lam.join(",");
}

export function fromKey(k: string): Partition {
  return k === "" ? [] : k.split(",").map(Number);
}

/** All partitions of d with parts at most maxPart, largest first part first. */
export function partitionsOf(d: number, maxPart?: number): Partition[] {
  const cap = maxPart === undefined ? d : maxPart;
  if (d === 0) return [[]];
  const out: Partition[] = [];
  for (let first = Math.min(d, cap); first >= 1; first--) {
    for (const rest of partitionsOf(d - first, first)) {
      out.push([first, ...rest]);
    }
  }
  return out;
}

/** Partitions of every size 0..maxSize, ordered by termCompare. */
export function partitionsUpTo(maxSize: number, maxPart?: number): Partition[] {
  const out: Partition[] = [];
  for (let d = 0; d <= maxSize; d++) out.push(...partitionsOf(d, maxPart));
  return out;
}

export function conjugate(lam: readonly number[]): Partition {
  if (lam.length === 0) return [];
  const out: number[] = [];
  for (let j = 0; j < lam[0]; j++) {
    out.push(lam.filter((part) => part > j).length);
  }
  return out;
}

/** True if big/small is a horizontal strip: containment with at most
 *  one new cell per column. */
export function isHorizontalStrip(
  small: readonly number[],
  big: readonly number[],
): boolean {
  if (small.length > big.length) return false;
  for (let i = 0; i < big.length; i++) {
    const lo = i < small.length ? small[i] : 0;
    if (big[i] < lo) return false;
    if (i > 0 && big[i] > (i - 1 < small.length ? small[i - 1] : 0)) return false;
  }
  return true;
}

/**
 * Term order used by the main library when listing h-basis terms:
 * smaller degree first, then reverse lexicographic (larger parts first).
 */
export function termCompare(a: readonly number[], b: readonly number[]): number {
  const da = sum(a);
  const db = sum(b);
  if (da !== db) return da - db;
  const n = Math.min(a.length, b.length);
  for (let i = 0; i < n; i++) {
    if (a[i] !== b[i]) return b[i] - a[i];
  }
  return a.length - b.length;
}
