/**
 * Dual stable Grothendieck polynomials from the Lam-Pylyavskyy model:
 * g_lambda generates reverse plane partitions of shape lambda, rows and
 * columns weakly increasing, where the letter i is weighted once per
 * column it appears in.  Degrees run from the number of columns of
 * lambda up to |lambda|, so the h expansion is solved degree by degree.
 */

import { Partition, sum } from "./partitions";
import {
  HExpansion,
  SymJson,
  addInto,
  contentPartition,
  hToJson,
  mergeExpansions,
  monomialToH,
} from "./symfunc";

/** Column-content buckets over all reverse plane partitions of shape
 *  lam with entries in 1..n.  Keys are full length-n count vectors;
 *  only partition-shaped contents are kept. */
export function rppColumnContents(lam: Partition, n: number): Map<string, bigint> {
  const buckets = new Map<string, bigint>();
  const rows = lam.length;
  const filling: number[][] = lam.map((len) => Array(len).fill(0));

  const record = (): void => {
    const counts = Array(n).fill(0);
    const cols = rows === 0 ? 0 : lam[0];
    for (let c = 0; c < cols; c++) {
      let prev = 0;
      for (let r = 0; r < rows && c < lam[r]; r++) {
        const v = filling[r][c];
        if (v !== prev) counts[v - 1]++;
        prev = v;
      }
    }
    if (contentPartition(counts) !== null) addInto(buckets, counts.join(","), 1n);
  };

  const fill = (r: number, c: number): void => {
    if (r === rows) {
      record();
      return;
    }
    const [nr, nc] = c + 1 < lam[r] ? [r, c + 1] : [r + 1, 0];
    const left = c > 0 ? filling[r][c - 1] : 1;
    const above = r > 0 && c < lam[r - 1] ? filling[r - 1][c] : 1;
    for (let v = Math.max(left, above); v <= n; v++) {
      filling[r][c] = v;
      fill(nr, nc);
    }
  };

  if (rows === 0) {
    buckets.set(Array(n).fill(0).join(","), 1n);
  } else {
    fill(0, 0);
  }
  return buckets;
}

export function dualGrothH(lam: Partition): HExpansion {
  const d = sum(lam);
  if (d === 0) return new Map([["", 1n]]);
  const n = d;
  const buckets = rppColumnContents(lam, n);
  const degrees = new Set<number>();
  for (const k of buckets.keys()) {
    degrees.add(k.split(",").reduce((a, b) => a + Number(b), 0));
  }
  const pieces = [...degrees].sort((a, b) => a - b).map((deg) =>
    monomialToH(deg, n, (content) => {
      const padded = [...content, ...Array(n - content.length).fill(0)];
      return buckets.get(padded.join(",")) ?? 0n;
    }),
  );
  return mergeExpansions(pieces);
}

export function dualGrothJson(lam: Partition): SymJson {
  return hToJson(dualGrothH(lam));
}
