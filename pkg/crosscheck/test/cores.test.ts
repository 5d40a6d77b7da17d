import { describe, expect, it } from "vitest";

import { boundedOf, coreOf, hookLength, isCore, kConjugate } from "../src/cores";
import { conjugate, partitionsUpTo, sum } from "../src/partitions";

describe("hook arithmetic", () => {
  it("computes hook lengths", () => {
    // Shape (3,2): hooks 4,3,1 / 2,1.
    expect(hookLength([3, 2], 0, 0)).toBe(4);
    expect(hookLength([3, 2], 0, 1)).toBe(3);
    expect(hookLength([3, 2], 0, 2)).toBe(1);
    expect(hookLength([3, 2], 1, 0)).toBe(2);
  });

  it("recognizes cores", () => {
    expect(isCore(2, [4, 2])).toBe(true);
    expect(isCore(2, [3, 2])).toBe(false);
    expect(isCore(1, [3, 2, 1])).toBe(true);
    expect(isCore(3, [])).toBe(true);
  });
});

describe("coreOf", () => {
  it("matches hand computations", () => {
    expect(coreOf(2, [2, 2])).toEqual([4, 2]);
    expect(coreOf(2, [1, 1, 1])).toEqual([2, 1, 1]);
    expect(coreOf(1, [1, 1, 1])).toEqual([3, 2, 1]);
    expect(coreOf(3, [])).toEqual([]);
  });

  it("is the identity once k exceeds the size", () => {
    expect(coreOf(6, [3, 2, 1])).toEqual([3, 2, 1]);
    expect(coreOf(9, [4, 3, 2])).toEqual([4, 3, 2]);
  });

  it("round-trips through boundedOf for every small input", () => {
    for (let k = 1; k <= 4; k++) {
      for (const lam of partitionsUpTo(6, k)) {
        const core = coreOf(k, lam);
        expect(isCore(k, core)).toBe(true);
        expect(boundedOf(k, core)).toEqual(lam);
      }
    }
  });
});

describe("kConjugate", () => {
  it("degenerates to ordinary conjugation for large k", () => {
    expect(kConjugate(5, [3, 1])).toEqual([2, 1, 1]);
    expect(kConjugate(6, [2, 2, 1])).toEqual(conjugate([2, 2, 1]));
  });

  it("is a size-preserving involution", () => {
    for (let k = 1; k <= 3; k++) {
      for (const lam of partitionsUpTo(6, k)) {
        const flip = kConjugate(k, lam);
        expect(sum(flip)).toBe(sum(lam));
        expect(kConjugate(k, flip)).toEqual(lam);
      }
    }
  });

  it("transposes the core diagram", () => {
    expect(conjugate(coreOf(2, [2, 2]))).toEqual([2, 2, 1, 1]);
    expect(kConjugate(2, [2, 2])).toEqual(boundedOf(2, [2, 2, 1, 1]));
  });
});
