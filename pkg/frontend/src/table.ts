/**
 * Reader for the frozen paleylab table formats (CSV with `# key=value`
 * metadata lines, or the JSON mirror). Refuses inputs whose embedded
 * schema does not match what a figure expects, and inputs with no data.
 */

import { readFileSync } from "node:fs";

export interface Table {
  schema: string;
  meta: Record<string, string>;
  columns: string[];
  rows: string[][];
}

export class TableError extends Error {}

export function parseCsv(text: string, path: string): Table {
  const meta: Record<string, string> = {};
  const lines = text.split(/\r?\n/);
  let i = 0;
  for (; i < lines.length && lines[i].startsWith("#"); i++) {
    const body = lines[i].replace(/^#\s*/, "");
    const eq = body.indexOf("=");
    if (eq > 0) meta[body.slice(0, eq)] = body.slice(eq + 1);
  }
  if (i >= lines.length || lines[i].trim() === "") {
    throw new TableError(`${path}: no header row`);
  }
  const columns = lines[i].split(",");
  const rows = lines
    .slice(i + 1)
    .filter((l) => l.trim() !== "")
    .map((l) => l.split(","));
  const schema = meta["schema"];
  if (!schema) throw new TableError(`${path}: missing schema metadata`);
  return { schema, meta, columns, rows };
}

export function parseJsonTable(text: string, path: string): Table {
  let doc: any;
  try {
    doc = JSON.parse(text);
  } catch {
    throw new TableError(`${path}: not valid JSON`);
  }
  const schema = doc?.meta?.schema;
  if (!schema) throw new TableError(`${path}: missing schema metadata`);
  const meta: Record<string, string> = {};
  for (const [k, v] of Object.entries(doc.meta)) meta[k] = String(v);
  return {
    schema,
    meta,
    columns: doc.columns ?? [],
    rows: (doc.rows ?? []).map((r: unknown[]) => r.map(String)),
  };
}

export function loadTable(path: string): Table {
  const text = readFileSync(path, "utf8");
  const table = path.endsWith(".json")
    ? parseJsonTable(text, path)
    : parseCsv(text, path);
  if (table.rows.length === 0) {
    throw new TableError(`${path}: table has no data rows`);
  }
  return table;
}

export function requireSchema(table: Table, expected: string, path: string): void {
  if (table.schema !== expected) {
    throw new TableError(
      `${path}: schema mismatch: have ${table.schema}, need ${expected}`,
    );
  }
}

/** Numeric column accessor; rejects missing columns up front. */
export function column(table: Table, name: string): number[] {
  const idx = table.columns.indexOf(name);
  if (idx < 0) throw new TableError(`missing column ${name} (have ${table.columns.join(",")})`);
  return table.rows.map((r) => Number(r[idx]));
}

export function textColumn(table: Table, name: string): string[] {
  const idx = table.columns.indexOf(name);
  if (idx < 0) throw new TableError(`missing column ${name} (have ${table.columns.join(",")})`);
  return table.rows.map((r) => r[idx]);
}
