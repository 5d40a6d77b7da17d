import { describe, expect, it } from "vitest";

import { affineKostka, applyCyclicSet, applyRaise, kschurJson } from "../src/kschur";
import { partitionsUpTo } from "../src/partitions";
import { schurJson } from "../src/schur";

describe("applyRaise", () => {
  it("adds all addable corners of one residue", () => {
    expect(applyRaise(2, [], 0)).toEqual([1]);
    expect(applyRaise(2, [1], 1)).toEqual([2]);
    expect(applyRaise(2, [1], 2)).toEqual([1, 1]);
    // (2) has residue-2 corners at both (0,2) and (1,0).
    expect(applyRaise(2, [2], 2)).toEqual([3, 1]);
    expect(applyRaise(2, [1, 1], 1)).toEqual([2, 1, 1]);
  });

  it("returns null when nothing is addable", () => {
    expect(applyRaise(2, [], 1)).toBeNull();
    expect(applyRaise(2, [1], 0)).toBeNull();
    expect(applyRaise(2, [2], 0)).toBeNull();
  });
});

describe("applyCyclicSet", () => {
  it("acts right to left through the decreasing word", () => {
    // {1,2} reads as s_2 s_1, so s_1 acts first: (1) -> (2) -> (3,1).
    expect(applyCyclicSet(2, [1], [1, 2])).toEqual([3, 1]);
    expect(applyCyclicSet(2, [1], [0, 1])).toBeNull();
    expect(applyCyclicSet(2, [1], [0, 2])).toBeNull();
    expect(applyCyclicSet(2, [], [0, 1])).toEqual([2]);
  });
});

describe("affineKostka", () => {
  it("matches the hand chain counts at k = 2, degree 3", () => {
    expect(affineKostka(2, [2, 1], [2, 1])).toBe(1n);
    expect(affineKostka(2, [2, 1], [1, 1, 1])).toBe(1n);
    expect(affineKostka(2, [1, 1, 1], [2, 1])).toBe(0n);
    expect(affineKostka(2, [1, 1, 1], [1, 1, 1])).toBe(1n);
  });
});

describe("kschurJson", () => {
  it("pins the hand-solved k = 2 values", () => {
    expect(kschurJson(2, [2, 1]).terms).toEqual([
      { partition: [2, 1], coeff: "1" },
    ]);
    expect(kschurJson(2, [1, 1, 1]).terms).toEqual([
      { partition: [2, 1], coeff: "-1" },
      { partition: [1, 1, 1], coeff: "1" },
    ]);
  });

  it("sends single rows to h_r", () => {
    for (let r = 1; r <= 3; r++) {
      expect(kschurJson(3, [r]).terms).toEqual([{ partition: [r], coeff: "1" }]);
    }
  });

  it("collapses to the Schur function once k is large", () => {
    for (const lam of partitionsUpTo(5)) {
      expect(kschurJson(5, lam)).toEqual(schurJson(lam));
    }
    expect(kschurJson(6, [3, 2, 1])).toEqual(schurJson([3, 2, 1]));
    expect(kschurJson(6, [2, 2, 1, 1])).toEqual(schurJson([2, 2, 1, 1]));
  });

  it("handles the empty shape", () => {
    expect(JSON.stringify(kschurJson(2, []))).toBe(
      '{"basis":"h","terms":[{"partition":[],"coeff":"1"}]}',
    );
  });
});
