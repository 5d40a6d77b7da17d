/**
 * k-Schur functions (t = 1) through the affine Pieri rule, computed
 * directly on (k+1)-cores.  A simple reflection s_i adds every addable
 * corner of residue i (the residue of cell (r, c) is c - r mod k+1);
 * multiplying by h_r applies a cyclically decreasing set of r distinct
 * reflections.  Counting reduced chains from the empty core gives the
 * affine Kostka matrix K[shape][content], and the triangular system
 * h_nu = sum_lambda K[lambda][nu] s_lambda solves for the h expansion.
 */

import { coreOf } from "./cores";
import { solveLinear } from "./fraction";
import { Partition, fromKey, key, partitionsOf, sum } from "./partitions";
import { HExpansion, SymJson, hToJson } from "./symfunc";

/** Apply s_i to a core: add every addable corner of residue i, or
 *  return null when the reflection does not raise. */
export function applyRaise(k: number, shape: Partition, i: number): Partition | null {
  const n = k + 1;
  const addable: number[] = [];
  for (let r = 0; r < shape.length; r++) {
    const c = shape[r];
    if ((r === 0 || shape[r - 1] > c) && mod(c - r, n) === i) addable.push(r);
  }
  if (mod(-shape.length, n) === i) addable.push(shape.length);
  for (let r = 0; r < shape.length; r++) {
    const c = shape[r] - 1;
    const corner = r + 1 === shape.length || shape[r + 1] <= c;
    if (corner && mod(c - r, n) === i && addable.length > 0) {
      throw new Error(`core has addable and removable ${i}-corners: ${shape}`);
    }
  }
  if (addable.length === 0) return null;
  const grown = [...shape];
  for (const r of addable) {
    if (r === shape.length) grown.push(1);
    else grown[r]++;
  }
  return grown;
}

function mod(a: number, n: number): number {
  return ((a % n) + n) % n;
}

/**
 * Apply the cyclically decreasing product over a residue set: each
 * maximal cyclic run a, a+1, ..., b acts in ascending order (the word
 * reads descending, the action multiplies right to left).  Returns null
 * when any reflection fails to raise, so surviving chains are reduced.
 */
export function applyCyclicSet(
  k: number,
  shape: Partition,
  residues: readonly number[],
): Partition | null {
  const n = k + 1;
  if (residues.length >= n) return null;
  const inSet = new Set(residues);
  let current: Partition | null = [...shape];
  for (const start of residues) {
    if (inSet.has(mod(start - 1, n))) continue;
    for (let i = start; inSet.has(i); i = mod(i + 1, n)) {
      current = applyRaise(k, current!, i);
      if (current === null) return null;
    }
  }
  return current;
}

function subsetsOfSize(n: number, r: number): number[][] {
  const out: number[][] = [];
  const pick = (next: number, chosen: number[]): void => {
    if (chosen.length === r) {
      out.push([...chosen]);
      return;
    }
    for (let i = next; i <= n - (r - chosen.length); i++) {
      chosen.push(i);
      pick(i + 1, chosen);
      chosen.pop();
    }
  };
  pick(0, []);
  return out;
}

/** Number of reduced factorizations of the Grassmannian element of mu
 *  into cyclically decreasing blocks with sizes lam, i.e. the monomial
 *  coefficient [x^lam] of the affine Stanley series of mu. */
export function affineKostka(k: number, mu: Partition, lam: Partition): bigint {
  const target = key(coreOf(k, mu));
  let states = new Map<string, bigint>([["", 1n]]);
  for (let j = lam.length - 1; j >= 0; j--) {
    const next = new Map<string, bigint>();
    for (const [stateKey, count] of states) {
      const shape = fromKey(stateKey);
      for (const subset of subsetsOfSize(k + 1, lam[j])) {
        const grown = applyCyclicSet(k, shape, subset);
        if (grown !== null) {
          const grownKey = key(grown);
          next.set(grownKey, (next.get(grownKey) ?? 0n) + count);
        }
      }
    }
    states = next;
  }
  return states.get(target) ?? 0n;
}

/**
 * h expansion of the k-Schur function labelled by the k-bounded
 * partition lam, solved from the affine Kostka system over all
 * k-bounded partitions of the same size.
 */
export function kschurH(k: number, lam: Partition): HExpansion {
  if (lam.some((part) => part > k)) throw new Error(`not ${k}-bounded: ${lam}`);
  const d = sum(lam);
  if (d === 0) return new Map([["", 1n]]);
  const basis = partitionsOf(d, k);
  const kostka = basis.map((shape) =>
    basis.map((content) => affineKostka(k, shape, content)),
  );
  const rhs = basis.map((shape) => (key(shape) === key(lam) ? 1n : 0n));
  const solved = solveLinear(kostka, rhs);
  const out: HExpansion = new Map();
  basis.forEach((nu, j) => {
    const value = solved[j].toBigInt();
    if (value !== 0n) out.set(key(nu), value);
  });
  return out;
}

export function kschurJson(k: number, lam: Partition): SymJson {
  return hToJson(kschurH(k, lam));
}
