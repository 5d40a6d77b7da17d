/**
 * Fixture generator.  Recomputes every fixture kind from scratch and
 * writes one JSON file per kind into the main test suite's fixtures
 * directory.  Output is deterministic: fixed ranges, fixed enumeration
 * order, compact JSON with a trailing newline.
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { coreOf, kConjugate } from "./cores";
import { dualGrothJson } from "./dualgroth";
import { kschurJson } from "./kschur";
import { Partition, partitionsUpTo, termCompare } from "./partitions";
import { schurJson } from "./schur";

export const GENERATOR = "katalan-crosscheck 0.1.0";

export interface FixtureFile {
  kind: string;
  generator: string;
  range: Record<string, unknown>;
  fixtures: { inputs: Record<string, unknown>; expected: unknown }[];
}

function lambdaFixtures(
  kind: string,
  maxSize: number,
  expected: (lam: Partition) => unknown,
): FixtureFile {
  const shapes = partitionsUpTo(maxSize).sort(termCompare);
  return {
    kind,
    generator: GENERATOR,
    range: { max_size: maxSize },
    fixtures: shapes.map((lam) => ({
      inputs: { lambda: lam },
      expected: expected(lam),
    })),
  };
}

function kLambdaFixtures(
  kind: string,
  ks: number[],
  maxSize: number,
  expected: (k: number, lam: Partition) => unknown,
): FixtureFile {
  const fixtures: FixtureFile["fixtures"] = [];
  for (const k of ks) {
    const shapes = partitionsUpTo(maxSize, k).sort(termCompare);
    for (const lam of shapes) {
      fixtures.push({ inputs: { k, lambda: lam }, expected: expected(k, lam) });
    }
  }
  return { kind, generator: GENERATOR, range: { ks, max_size: maxSize }, fixtures };
}

export function buildAll(): FixtureFile[] {
  return [
    lambdaFixtures("schur", 6, (lam) => schurJson(lam)),
    lambdaFixtures("dual-groth", 6, (lam) => dualGrothJson(lam)),
    kLambdaFixtures("kschur", [2, 3], 6, (k, lam) => kschurJson(k, lam)),
    kLambdaFixtures("core", [1, 2, 3, 4], 8, (k, lam) => coreOf(k, lam)),
    kLambdaFixtures("kconjugate", [1, 2, 3, 4], 8, (k, lam) => kConjugate(k, lam)),
  ];
}

function main(): void {
  const outDir =
    process.argv[2] ?? path.resolve(__dirname, "..", "..", "tests", "fixtures");
  fs.mkdirSync(outDir, { recursive: true });
  for (const file of buildAll()) {
    const target = path.join(outDir, `${file.kind}.json`);
    fs.writeFileSync(target, JSON.stringify(file) + "\n");
    console.log(`wrote ${target} (${file.fixtures.length} fixtures)`);
  }
}

if (require.main === module) {
  main();
}
