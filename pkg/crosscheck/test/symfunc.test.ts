import { describe, expect, it } from "vitest";

import { Frac, solveLinear } from "../src/fraction";
import {
  compositions,
  contentPartition,
  hExpansionCoefficient,
  hMonomialTable,
  hToJson,
  monomialToH,
} from "../src/symfunc";

describe("compositions", () => {
  it("enumerates ordered sums", () => {
    expect(compositions(3, 2)).toEqual([
      [0, 3],
      [1, 2],
      [2, 1],
      [3, 0],
    ]);
    expect(compositions(0, 3)).toEqual([[0, 0, 0]]);
  });
});

describe("contentPartition", () => {
  it("keeps padded partitions only", () => {
    expect(contentPartition([2, 1, 0])).toEqual([2, 1]);
    expect(contentPartition([2, 0, 1])).toBeNull();
    expect(contentPartition([1, 2])).toBeNull();
    expect(contentPartition([0, 0])).toEqual([]);
  });
});

describe("hMonomialTable", () => {
  it("expands h_2 and h_11 in two variables", () => {
    const h2 = hMonomialTable([2], 2);
    expect(h2.get("2,0")).toBe(1n);
    expect(h2.get("1,1")).toBe(1n);
    const h11 = hMonomialTable([1, 1], 2);
    expect(h11.get("2,0")).toBe(1n);
    expect(h11.get("1,1")).toBe(2n);
  });
});

describe("solveLinear", () => {
  it("solves an integer system exactly", () => {
    const x = solveLinear(
      [
        [2n, 1n],
        [1n, 3n],
      ],
      [5n, 10n],
    );
    expect(x.map((f) => f.toBigInt())).toEqual([1n, 3n]);
  });

  it("keeps fractions exact", () => {
    const half = new Frac(1n, 2n).add(new Frac(1n, 3n));
    expect(half.num).toBe(5n);
    expect(half.den).toBe(6n);
  });
});

describe("monomialToH", () => {
  it("recovers a known h expansion from monomial data", () => {
    const target = new Map([
      ["2,1", 1n],
      ["3", -2n],
    ]);
    const recovered = monomialToH(3, 3, (lam) =>
      hExpansionCoefficient(target, lam, 3),
    );
    expect(recovered).toEqual(target);
  });
});

describe("hToJson", () => {
  it("matches the shared schema byte for byte", () => {
    const json = hToJson(
      new Map([
        ["2,1", 1n],
        ["3", -1n],
      ]),
    );
    expect(JSON.stringify(json)).toBe(
      '{"basis":"h","terms":[{"partition":[3],"coeff":"-1"},{"partition":[2,1],"coeff":"1"}]}',
    );
  });

  it("orders terms degree first", () => {
    const json = hToJson(
      new Map([
        ["1,1", 1n],
        ["2", -1n],
        ["1", 1n],
      ]),
    );
    expect(json.terms.map((t) => t.partition)).toEqual([[1], [2], [1, 1]]);
  });
});
