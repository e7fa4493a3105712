/** Hand-rolled SVG charts: deterministic output, fixed style, no timestamps. */

export interface Series {
  label: string;
  color: string;
  x: number[];
  y: number[];
}

export interface LineChartOptions {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  width?: number;
  height?: number;
  legendPosition?: "top-right" | "bottom-right";
}

const MARGIN = { top: 42, right: 24, bottom: 46, left: 58 };
const FONT = "font-family=\"Helvetica, Arial, sans-serif\"";

function fmt(v: number): string {
  if (!Number.isFinite(v)) return "0";
  const s = v.toPrecision(6);
  return String(Number(s)); // trim trailing zeros deterministically
}

/** A handful of round tick positions covering [lo, hi]. */
export function ticks(lo: number, hi: number, want = 6): number[] {
  if (!(hi > lo)) return [lo];
  const span = hi - lo;
  const step0 = span / Math.max(want - 1, 1);
  const mag = Math.pow(10, Math.floor(Math.log10(step0)));
  let step = mag;
  for (const m of [1, 2, 2.5, 5, 10]) {
    if (mag * m >= step0) {
      step = mag * m;
      break;
    }
  }
  const start = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let t = start; t <= hi + 1e-12 * span; t += step) {
    out.push(Number(t.toPrecision(12)));
  }
  return out.length ? out : [lo];
}

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!(hi > lo)) {
    hi = lo + 1;
  }
  return [lo, hi];
}

export function lineChart(opts: LineChartOptions): string {
  const width = opts.width ?? 720;
  const height = opts.height ?? 480;
  if (opts.series.length === 0) {
    throw new Error(`figure "${opts.title}" has no series to draw`);
  }
  const xs = opts.series.flatMap((s) => s.x);
  const ys = opts.series.flatMap((s) => s.y);
  const [x0, x1] = extent(xs);
  let [y0, y1] = extent(ys);
  const pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;

  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const px = (v: number) => MARGIN.left + ((v - x0) / (x1 - x0)) * plotW;
  const py = (v: number) => MARGIN.top + plotH - ((v - y0) / (y1 - y0)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${width / 2}" y="24" text-anchor="middle" font-size="15" ${FONT}>${opts.title}</text>`,
  );

  // grid and ticks
  for (const t of ticks(x0, x1)) {
    const x = px(t);
    parts.push(
      `<line x1="${fmt(x)}" y1="${MARGIN.top}" x2="${fmt(x)}" y2="${MARGIN.top + plotH}" stroke="#dddddd" stroke-width="1"/>`,
      `<text x="${fmt(x)}" y="${MARGIN.top + plotH + 18}" text-anchor="middle" font-size="11" ${FONT}>${fmt(t)}</text>`,
    );
  }
  for (const t of ticks(y0, y1)) {
    const y = py(t);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${fmt(y)}" x2="${MARGIN.left + plotW}" y2="${fmt(y)}" stroke="#dddddd" stroke-width="1"/>`,
      `<text x="${MARGIN.left - 8}" y="${fmt(y + 4)}" text-anchor="end" font-size="11" ${FONT}>${fmt(t)}</text>`,
    );
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" fill="none" stroke="#333333"/>`,
  );
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${height - 10}" text-anchor="middle" font-size="13" ${FONT}>${opts.xLabel}</text>`,
    `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" font-size="13" ${FONT} transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">${opts.yLabel}</text>`,
  );

  for (const s of opts.series) {
    if (s.x.length !== s.y.length || s.x.length === 0) {
      throw new Error(`series "${s.label}" has mismatched or empty coordinates`);
    }
    const pts = s.x.map((v, i) => `${fmt(px(v))},${fmt(py(s.y[i]))}`).join(" ");
    parts.push(
      `<polyline fill="none" stroke="${s.color}" stroke-width="2" points="${pts}"/>`,
    );
  }

  // legend
  const atBottom = opts.legendPosition === "bottom-right";
  const lx = MARGIN.left + plotW - 230;
  const ly = atBottom ? MARGIN.top + plotH - 18 * opts.series.length - 12 : MARGIN.top + 10;
  parts.push(
    `<rect x="${lx - 8}" y="${ly - 12}" width="232" height="${18 * opts.series.length + 10}" fill="white" fill-opacity="0.85" stroke="#999999" class="legend"/>`,
  );
  opts.series.forEach((s, i) => {
    const y = ly + 18 * i;
    parts.push(
      `<line x1="${lx}" y1="${y}" x2="${lx + 26}" y2="${y}" stroke="${s.color}" stroke-width="2"/>`,
      `<text x="${lx + 32}" y="${y + 4}" font-size="11" ${FONT} class="legend-label">${s.label}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

export interface HeatmapOptions {
  title: string;
  xLabel: string;
  yLabel: string;
  xs: number[]; // unique, ascending
  ys: number[];
  /** value at (xs[i], ys[j]), indexed values[i][j] */
  values: number[][];
  width?: number;
  height?: number;
}

function rampColor(t: number): string {
  // white -> blue -> red, clamped
  const u = Math.min(Math.max(t, 0), 1);
  const r = Math.round(255 * Math.min(1, 2 * u));
  const b = Math.round(255 * Math.min(1, 2 * (1 - u)));
  const g = Math.round(200 * (1 - Math.abs(2 * u - 1)));
  return `rgb(${r},${g},${b})`;
}

export function heatmap(opts: HeatmapOptions): string {
  const width = opts.width ?? 640;
  const height = opts.height ?? 560;
  const plotW = width - MARGIN.left - MARGIN.right - 40;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const nx = opts.xs.length;
  const ny = opts.ys.length;
  if (nx === 0 || ny === 0) {
    throw new Error(`heatmap "${opts.title}" has an empty axis`);
  }
  const flat = opts.values.flat();
  const [v0, v1] = [Math.min(...flat), Math.max(...flat)];
  const cw = plotW / nx;
  const ch = plotH / ny;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${width / 2}" y="24" text-anchor="middle" font-size="15" ${FONT}>${opts.title}</text>`,
  );
  for (let i = 0; i < nx; i++) {
    for (let j = 0; j < ny; j++) {
      const t = v1 > v0 ? (opts.values[i][j] - v0) / (v1 - v0) : 0;
      const x = MARGIN.left + i * cw;
      const y = MARGIN.top + plotH - (j + 1) * ch;
      parts.push(
        `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(cw + 0.5)}" height="${fmt(ch + 0.5)}" fill="${rampColor(t)}" class="cell"/>`,
      );
    }
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" fill="none" stroke="#333333"/>`,
  );
  opts.xs.forEach((v, i) => {
    if (i % Math.ceil(nx / 9) === 0) {
      parts.push(
        `<text x="${fmt(MARGIN.left + (i + 0.5) * cw)}" y="${MARGIN.top + plotH + 18}" text-anchor="middle" font-size="11" ${FONT}>${fmt(v)}</text>`,
      );
    }
  });
  opts.ys.forEach((v, j) => {
    if (j % Math.ceil(ny / 9) === 0) {
      parts.push(
        `<text x="${MARGIN.left - 8}" y="${fmt(MARGIN.top + plotH - (j + 0.5) * ch + 4)}" text-anchor="end" font-size="11" ${FONT}>${fmt(v)}</text>`,
      );
    }
  });
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${height - 10}" text-anchor="middle" font-size="13" ${FONT}>${opts.xLabel}</text>`,
    `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" font-size="13" ${FONT} transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">${opts.yLabel}</text>`,
  );
  // color scale annotation
  parts.push(
    `<text x="${width - 30}" y="${MARGIN.top + 12}" text-anchor="end" font-size="11" ${FONT}>max ${fmt(v1)}</text>`,
    `<text x="${width - 30}" y="${MARGIN.top + plotH}" text-anchor="end" font-size="11" ${FONT}>min ${fmt(v0)}</text>`,
  );
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
