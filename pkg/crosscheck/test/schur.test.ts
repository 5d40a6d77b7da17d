import { describe, expect, it } from "vitest";

import { schurJson, ssytContents } from "../src/schur";

describe("ssytContents", () => {
  it("counts Kostka numbers for shape (2,1)", () => {
    const buckets = ssytContents([2, 1], 3);
    expect(buckets.get("2,1,0")).toBe(1n);
    expect(buckets.get("1,1,1")).toBe(2n);
    expect(buckets.get("3,0,0")).toBeUndefined();
  });
});

describe("schurJson", () => {
  it("handles the empty shape and single boxes", () => {
    expect(JSON.stringify(schurJson([]))).toBe(
      '{"basis":"h","terms":[{"partition":[],"coeff":"1"}]}',
    );
    expect(JSON.stringify(schurJson([1]))).toBe(
      '{"basis":"h","terms":[{"partition":[1],"coeff":"1"}]}',
    );
  });

  it("matches hand determinants for small shapes", () => {
    expect(schurJson([1, 1]).terms).toEqual([
      { partition: [2], coeff: "-1" },
      { partition: [1, 1], coeff: "1" },
    ]);
    expect(schurJson([2, 1]).terms).toEqual([
      { partition: [3], coeff: "-1" },
      { partition: [2, 1], coeff: "1" },
    ]);
    expect(schurJson([2, 2]).terms).toEqual([
      { partition: [3, 1], coeff: "-1" },
      { partition: [2, 2], coeff: "1" },
    ]);
  });

  it("single rows are complete homogeneous functions", () => {
    for (let r = 1; r <= 5; r++) {
      expect(schurJson([r]).terms).toEqual([{ partition: [r], coeff: "1" }]);
    }
  });

  it("single columns alternate over row shapes", () => {
    // e_3 = h_111 - 2 h_21 + h_3 by the classical involution.
    expect(schurJson([1, 1, 1]).terms).toEqual([
      { partition: [3], coeff: "1" },
      { partition: [2, 1], coeff: "-2" },
      { partition: [1, 1, 1], coeff: "1" },
    ]);
  });
});
