import { describe, expect, it } from "vitest";

import { CsvError, numberColumn, parseCsv, requireColumns } from "../src/csv.js";

describe("parseCsv", () => {
  it("parses header and rows", () => {
    const t = parseCsv("a,b\n1,2\n3,4\n");
    expect(t.header).toEqual(["a", "b"]);
    expect(t.rows).toEqual([["1", "2"], ["3", "4"]]);
  });

  it("rejects empty input with a clean error", () => {
    expect(() => parseCsv("", "empty.csv")).toThrowError(/empty\.csv: file is empty/);
    expect(() => parseCsv("a,b\n", "h.csv")).toThrowError(/no data rows/);
  });

  it("rejects ragged rows", () => {
    expect(() => parseCsv("a,b\n1,2,3\n")).toThrowError(/row 2 has 3 cells/);
  });
});

describe("columns", () => {
  it("names missing columns", () => {
    const t = parseCsv("a,b\n1,2\n");
    expect(() => requireColumns(t, ["a", "zz"], "f.csv")).toThrowError(/missing column\(s\) zz/);
  });

  it("extracts numbers and flags junk", () => {
    const t = parseCsv("a\n1.5\nnope\n");
    expect(() => numberColumn(t, "a")).toThrowError(CsvError);
    const ok = parseCsv("a\n1.5\n-2e3\n");
    expect(numberColumn(ok, "a")).toEqual([1.5, -2000]);
  });
});
