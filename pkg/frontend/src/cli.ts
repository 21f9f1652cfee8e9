#!/usr/bin/env node
/**
 * paleylab-render render --figure figN --in table.csv [--in overlay.csv] --out fig.svg
 *
 * Renders one figure from primary-component tables. Exits 1 on schema
 * mismatches, missing columns, empty inputs, or unknown figures.
 */

import { writeFileSync } from "node:fs";
import process from "node:process";

import { FIGURES, renderFigure } from "./figures.js";
import { TableError, loadTable, requireSchema } from "./table.js";

interface Args {
  figure: string;
  inputs: string[];
  out: string;
}

function parseArgs(argv: string[]): Args {
  if (argv[0] !== "render") {
    throw new TableError(`unknown command ${argv[0] ?? "(none)"}; only: render`);
  }
  let figure = "";
  let out = "";
  const inputs: string[] = [];
  for (let i = 1; i < argv.length; i++) {
    switch (argv[i]) {
      case "--figure":
        figure = argv[++i];
        break;
      case "--in":
        inputs.push(argv[++i]);
        break;
      case "--out":
        out = argv[++i];
        break;
      default:
        throw new TableError(`unknown option ${argv[i]}`);
    }
  }
  if (!figure || !out || inputs.length === 0) {
    throw new TableError("usage: render --figure figN --in table.csv [--in ...] --out fig.svg");
  }
  return { figure, inputs, out };
}

export function main(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
    const spec = FIGURES[args.figure];
    if (!spec) {
      throw new TableError(
        `unknown figure ${args.figure}; known: ${Object.keys(FIGURES).join(", ")}`,
      );
    }
    const tables = args.inputs.map((p) => loadTable(p));
    tables.forEach((t, i) => requireSchema(t, spec.inputs[i], args.inputs[i]));
    writeFileSync(args.out, renderFigure(args.figure, tables));
    console.log(`wrote ${args.out}`);
    return 0;
  } catch (err) {
    if (err instanceof TableError || err instanceof Error) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
