/** Renders every figure type from committed sample tables and checks the
 * output is byte-deterministic and the failure modes are loud. */

import assert from "node:assert/strict";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { test } from "node:test";

import { main } from "../src/cli.js";
import { renderFigure } from "../src/figures.js";
import { TableError, loadTable, parseCsv } from "../src/table.js";

const DATA = join(import.meta.dirname, "..", "..", "testdata");
const CASES: Array<[string, string[]]> = [
  ["fig1", ["fig1.csv", "fig1.overlay.csv"]],
  ["fig2", ["fig2.csv"]],
  ["fig3", ["fig3.csv"]],
  ["fig4", ["fig4.csv"]],
  ["fig6", ["fig6.csv", "fig6.overlay.csv"]],
  ["fig7", ["fig7.csv"]],
];

for (const [figure, inputs] of CASES) {
  test(`${figure} renders and is deterministic`, () => {
    const tables = inputs.map((f) => loadTable(join(DATA, f)));
    const first = renderFigure(figure, tables);
    assert.ok(first.startsWith("<svg"), "produces svg");
    assert.ok(first.length > 500, "non-trivial scene");
    const again = renderFigure(figure, inputs.map((f) => loadTable(join(DATA, f))));
    assert.equal(first, again, "bit-identical on identical input");
  });
}

test("cli writes a file and round-trips deterministically", () => {
  const dir = mkdtempSync(join(tmpdir(), "paleylab-render-"));
  const out1 = join(dir, "a.svg");
  const out2 = join(dir, "b.svg");
  const args = [
    "render", "--figure", "fig7",
    "--in", join(DATA, "fig7.csv"),
    "--out", out1,
  ];
  assert.equal(main(args), 0);
  assert.equal(main([...args.slice(0, -1), out2]), 0);
  assert.equal(readFileSync(out1, "utf8"), readFileSync(out2, "utf8"));
});

test("empty table is refused", () => {
  const dir = mkdtempSync(join(tmpdir(), "paleylab-render-"));
  const empty = join(dir, "empty.csv");
  writeFileSync(empty, "# schema=paleylab.quartic-mineig.v1\np,n_vertices,neg_min_eig,half_sqrt_p,loc2_prediction\n");
  assert.throws(() => loadTable(empty), TableError);
  const code = main(["render", "--figure", "fig7", "--in", empty, "--out", join(dir, "x.svg")]);
  assert.equal(code, 1);
});

test("schema mismatch is refused", () => {
  const code = main([
    "render", "--figure", "fig7",
    "--in", join(DATA, "fig2.csv"),
    "--out", join(mkdtempSync(join(tmpdir(), "paleylab-render-")), "x.svg"),
  ]);
  assert.equal(code, 1);
});

test("missing column is a loud error", () => {
  const broken = parseCsv("# schema=paleylab.quartic-mineig.v1\np,neg_min_eig\n13,1.5\n", "inline");
  assert.throws(() => renderFigure("fig7", [broken]), /missing column/);
});

test("unknown figure id is refused", () => {
  const code = main([
    "render", "--figure", "fig5",
    "--in", join(DATA, "fig2.csv"),
    "--out", "/tmp/never.svg",
  ]);
  assert.equal(code, 1);
});

test("wrong input count is refused", () => {
  const t = loadTable(join(DATA, "fig2.csv"));
  assert.throws(() => renderFigure("fig1", [t]), /needs 2 input/);
});
