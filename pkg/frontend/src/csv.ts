/** Strict parsing of the numeric CSV tables the relaybounds CLI emits. */

export interface CsvTable {
  header: string[];
  rows: string[][];
}

export class CsvError extends Error {}

export function parseCsv(text: string, source = "<csv>"): CsvTable {
  const lines = text
    .split(/\r?\n/)
    .map((l) => l.trim())
    .filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new CsvError(`${source}: file is empty`);
  }
  const header = lines[0].split(",").map((h) => h.trim());
  if (lines.length === 1) {
    throw new CsvError(`${source}: no data rows under header [${header.join(", ")}]`);
  }
  const rows = lines.slice(1).map((line, i) => {
    const cells = line.split(",");
    if (cells.length !== header.length) {
      throw new CsvError(
        `${source}: row ${i + 2} has ${cells.length} cells, header has ${header.length}`,
      );
    }
    return cells.map((c) => c.trim());
  });
  return { header, rows };
}

export function requireColumns(table: CsvTable, needed: string[], source = "<csv>"): void {
  const missing = needed.filter((c) => !table.header.includes(c));
  if (missing.length > 0) {
    throw new CsvError(
      `${source}: missing column(s) ${missing.join(", ")}; found [${table.header.join(", ")}]`,
    );
  }
}

export function numberColumn(table: CsvTable, name: string, source = "<csv>"): number[] {
  const idx = table.header.indexOf(name);
  if (idx < 0) {
    throw new CsvError(`${source}: missing column ${name}`);
  }
  return table.rows.map((row, i) => {
    const v = Number(row[idx]);
    if (row[idx] === "" || Number.isNaN(v)) {
      throw new CsvError(`${source}: row ${i + 2}, column ${name}: not a number (${row[idx]!})`);
    }
    return v;
  });
}
