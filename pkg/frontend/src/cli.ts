#!/usr/bin/env node
/**
 * render_figs --in <csv dir> --out <image dir> [--only fig5,fig7]
 *
 * Reads the relaybounds CLI's CSV tables and writes the figure replicas
 * (SVG) and the two-relay table (Markdown).  Rendering is deterministic:
 * re-running overwrites byte-identical files.
 */

import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { join } from "node:path";

import { FIGURES, figureById, renderFromText } from "./figures.js";

export interface CliOptions {
  inDir: string;
  outDir: string;
  only?: string[];
}

export function parseArgs(argv: string[]): CliOptions {
  let inDir: string | undefined;
  let outDir: string | undefined;
  let only: string[] | undefined;
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    if (a === "--in") inDir = argv[++i];
    else if (a === "--out") outDir = argv[++i];
    else if (a === "--only") only = (argv[++i] ?? "").split(",").map((s) => s.trim()).filter(Boolean);
    else throw new Error(`unknown argument "${a}" (use --in, --out, --only)`);
  }
  if (!inDir || !outDir) {
    throw new Error("usage: render_figs --in <csv dir> --out <image dir> [--only fig5,fig7]");
  }
  return { inDir, outDir, only };
}

export function renderAll(opts: CliOptions): { written: string[]; failures: string[] } {
  const specs = opts.only ? opts.only.map(figureById) : FIGURES;
  mkdirSync(opts.outDir, { recursive: true });
  const written: string[] = [];
  const failures: string[] = [];
  for (const spec of specs) {
    const source = join(opts.inDir, spec.input);
    try {
      const text = readFileSync(source, "utf8");
      const out = renderFromText(spec, text, source);
      const path = join(opts.outDir, `${spec.id}.${out.kind}`);
      writeFileSync(path, out.content);
      written.push(path);
    } catch (err) {
      failures.push(`${spec.id}: ${(err as Error).message}`);
    }
  }
  return { written, failures };
}

export function main(argv: string[]): number {
  let opts: CliOptions;
  try {
    opts = parseArgs(argv);
  } catch (err) {
    console.error((err as Error).message);
    return 2;
  }
  const { written, failures } = renderAll(opts);
  for (const w of written) console.log(`wrote ${w}`);
  for (const f of failures) console.error(`failed ${f}`);
  return failures.length === 0 ? 0 : 1;
}

const entry = process.argv[1] ?? "";
if (entry.endsWith("cli.js") || entry.endsWith("render_figs")) {
  process.exit(main(process.argv.slice(2)));
}
