/**
 * Schur functions from first principles: s_lambda is the generating
 * function of semistandard tableaux of shape lambda, weakly increasing
 * along rows and strictly increasing down columns.  Enumerating all
 * fillings with entries bounded by |lambda| gives enough monomial data
 * to pin down the h expansion.
 */

import { Partition, sum } from "./partitions";
import {
  HExpansion,
  SymJson,
  addInto,
  contentPartition,
  hToJson,
  monomialToH,
} from "./symfunc";

/**
 * Count semistandard tableaux of the given shape with entries in 1..n,
 * bucketed by content vector.  Only partition-shaped contents are kept;
 * rearranged contents occur equally often and carry no extra data.
 */
export function ssytContents(lam: Partition, n: number): Map<string, bigint> {
  const buckets = new Map<string, bigint>();
  const rows = lam.length;
  const filling: number[][] = lam.map((len) => Array(len).fill(0));
  const counts = Array(n).fill(0);

  const fill = (r: number, c: number): void => {
    if (r === rows) {
      const shape = contentPartition(counts);
      if (shape !== null) addInto(buckets, counts.join(","), 1n);
      return;
    }
    const [nr, nc] = c + 1 < lam[r] ? [r, c + 1] : [r + 1, 0];
    const left = c > 0 ? filling[r][c - 1] : 1;
    const above = r > 0 && c < lam[r - 1] ? filling[r - 1][c] + 1 : 1;
    for (let v = Math.max(left, above); v <= n; v++) {
      filling[r][c] = v;
      counts[v - 1]++;
      fill(nr, nc);
      counts[v - 1]--;
    }
  };

  if (rows === 0) {
    buckets.set(Array(n).fill(0).join(","), 1n);
  } else {
    fill(0, 0);
  }
  return buckets;
}

export function schurH(lam: Partition): HExpansion {
  const d = sum(lam);
  if (d === 0) return new Map([["", 1n]]);
  const n = d;
  const buckets = ssytContents(lam, n);
  return monomialToH(d, n, (content) => {
    const padded = [...content, ...Array(n - content.length).fill(0)];
    return buckets.get(padded.join(",")) ?? 0n;
  });
}

export function schurJson(lam: Partition): SymJson {
  return hToJson(schurH(lam));
}
