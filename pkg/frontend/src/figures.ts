/** The figure registry: which CSV each replica reads and how it is drawn. */

import { CsvTable, numberColumn, parseCsv, requireColumns } from "./csv.js";
import { heatmap, lineChart, Series } from "./svg.js";

export interface Rendered {
  /** file extension, svg or md */
  kind: "svg" | "md";
  content: string;
}

export interface FigureSpec {
  id: string;
  /** default file name looked up under --in */
  input: string;
  requiredColumns: string[];
  description: string;
  render: (table: CsvTable, source: string) => Rendered;
}

// color roles shared by the rate-curve figures
const RATE_STYLE: Array<[string, string, string]> = [
  ["PdfRandom", "decode-forward, random switch", "#d62728"],
  ["PdfDeterministic", "decode-forward, fixed switch", "#1f77b4"],
  ["NncRandom", "quantize-forward, random switch", "#17becf"],
  ["NncDeterministic", "quantize-forward, fixed switch", "#e377c2"],
  ["Lda", "two-phase superposition", "#2ca02c"],
];

function rateCurves(table: CsvTable, source: string, title: string): Rendered {
  requireColumns(table, ["gamma", ...RATE_STYLE.map(([c]) => c)], source);
  const gamma = numberColumn(table, "gamma", source);
  const series: Series[] = RATE_STYLE.map(([col, label, color]) => ({
    label,
    color,
    x: gamma,
    y: numberColumn(table, col, source),
  }));
  return {
    kind: "svg",
    content: lineChart({
      title,
      xLabel: "relay listen fraction",
      yLabel: "rate [bits/channel use]",
      series,
    }),
  };
}

function gapCurves(
  table: CsvTable,
  source: string,
  title: string,
  wanted: Array<[string, string, string]>,
): Rendered {
  requireColumns(table, ["snr_db", ...wanted.map(([c]) => c)], source);
  const snr = numberColumn(table, "snr_db", source);
  const series: Series[] = wanted.map(([col, label, color]) => ({
    label,
    color,
    x: snr,
    y: numberColumn(table, col, source),
  }));
  return {
    kind: "svg",
    content: lineChart({
      title,
      xLabel: "SNR [dB]",
      yLabel: "max gap to the cut-set bound [bits]",
      series,
      legendPosition: "bottom-right",
    }),
  };
}

const fig4: FigureSpec = {
  id: "fig4",
  input: "fig4_lda_curves.csv",
  requiredColumns: ["gamma", "rate_iid_det", "rate_iid_rand", "rate_iidq_rand", "rate_optimal"],
  description: "bit-pipe relay strategies vs listen fraction",
  render(table, source) {
    requireColumns(table, this.requiredColumns, source);
    const gamma = numberColumn(table, "gamma", source);
    const style: Array<[string, string, string]> = [
      ["rate_iid_det", "fair bits, fixed switch", "#e377c2"],
      ["rate_iid_rand", "fair bits, random switch", "#2ca02c"],
      ["rate_iidq_rand", "tuned bias, random switch", "#1f77b4"],
      ["rate_optimal", "optimal relay input", "#000000"],
    ];
    const series = style.map(([col, label, color]) => ({
      label,
      color,
      x: gamma,
      y: numberColumn(table, col, source),
    }));
    return {
      kind: "svg",
      content: lineChart({
        title: "Bit-pipe half-duplex relay: rates by relay input strategy",
        xLabel: "relay listen fraction",
        yLabel: "rate [bits/slot]",
        series,
      }),
    };
  },
};

const fig5: FigureSpec = {
  id: "fig5",
  input: "fig5_rates_s0.csv",
  requiredColumns: ["gamma", ...RATE_STYLE.map(([c]) => c)],
  description: "scheme rates without a direct link (S=0, C=15, I=3)",
  render: (table, source) =>
    rateCurves(table, source, "Achievable rates without a direct link (S=0, C=15, I=3)"),
};

const fig6: FigureSpec = {
  id: "fig6",
  input: "fig6_rates_30db.csv",
  requiredColumns: ["gamma", ...RATE_STYLE.map(([c]) => c)],
  description: "scheme rates at the 30 dB operating point",
  render: (table, source) =>
    rateCurves(table, source, "Achievable rates at S=30 dB, C=37.63 dB, I=34.77 dB"),
};

const fig7: FigureSpec = {
  id: "fig7",
  input: "fig7_gap_sweep.csv",
  requiredColumns: ["snr_db", "max_gap_pdf-det", "max_gap_nnc-det", "max_gap_lda"],
  description: "worst-case gap vs SNR, fixed-switch schemes",
  render: (table, source) =>
    gapCurves(table, source, "Worst-case gap over the exponent grid, fixed switch", [
      ["max_gap_pdf-det", "decode-forward", "#1f77b4"],
      ["max_gap_nnc-det", "quantize-forward", "#e377c2"],
      ["max_gap_lda", "two-phase superposition", "#2ca02c"],
    ]),
};

const fig8: FigureSpec = {
  id: "fig8",
  input: "fig8_delta_map.csv",
  requiredColumns: ["beta_rd", "beta_sr", "delta_bits"],
  description: "random-switch rate advantage over the exponent grid",
  render(table, source) {
    requireColumns(table, this.requiredColumns, source);
    const brd = numberColumn(table, "beta_rd", source);
    const bsr = numberColumn(table, "beta_sr", source);
    const delta = numberColumn(table, "delta_bits", source);
    const xs = [...new Set(brd)].sort((a, b) => a - b);
    const ys = [...new Set(bsr)].sort((a, b) => a - b);
    const grid = xs.map(() => ys.map(() => 0));
    for (let k = 0; k < delta.length; k++) {
      grid[xs.indexOf(brd[k])][ys.indexOf(bsr[k])] = delta[k];
    }
    return {
      kind: "svg",
      content: heatmap({
        title: "Extra bits from a random listen/transmit switch",
        xLabel: "relay-to-destination exponent",
        yLabel: "source-to-relay exponent",
        xs,
        ys,
        values: grid,
      }),
    };
  },
};

const fig9: FigureSpec = {
  id: "fig9",
  input: "fig9_switch_gap.csv",
  requiredColumns: ["snr_db", "max_gap_pdf-det", "max_gap_pdf-rand"],
  description: "fixed vs random switch gap on relay-friendly exponents",
  render: (table, source) =>
    gapCurves(table, source, "Decode-forward gap: fixed vs random switch", [
      ["max_gap_pdf-det", "fixed switch", "#d62728"],
      ["max_gap_pdf-rand", "random switch", "#1f77b4"],
    ]),
};

const fig10: FigureSpec = {
  id: "fig10",
  input: "fig10_gap_vs_k.csv",
  requiredColumns: ["k", "gap_bits", "gap_asymptotic_bits"],
  description: "multi-relay gap guarantee vs network size",
  render(table, source) {
    requireColumns(table, this.requiredColumns, source);
    const k = numberColumn(table, "k", source);
    const series: Series[] = [
      { label: "gap bound", color: "#1f77b4", x: k, y: numberColumn(table, "gap_bits", source) },
      {
        label: "large-network shape",
        color: "#d62728",
        x: k,
        y: numberColumn(table, "gap_asymptotic_bits", source),
      },
    ];
    return {
      kind: "svg",
      content: lineChart({
        title: "Half-duplex network gap guarantee vs node count",
        xLabel: "nodes K",
        yLabel: "gap [bits]",
        series,
      }),
    };
  },
};

const table1: FigureSpec = {
  id: "table1",
  input: "table1_two_relay.csv",
  requiredColumns: [
    "a_s1", "a_s2", "a_1d", "a_2d", "b_1", "b_2",
    "fd_best", "fd_both", "hd_best", "hd_both",
  ],
  description: "two-relay capacity slopes: best relay vs both relays",
  render(table, source) {
    requireColumns(table, this.requiredColumns, source);
    const cols = this.requiredColumns;
    const lines: string[] = [];
    lines.push("# Two-relay networks: capacity slopes, relay selection vs cooperation");
    lines.push("");
    lines.push(
      "| links (s->r1, s->r2, r1->d, r2->d, r2->r1, r1->r2) | FD best relay | FD both | HD best relay | HD both |",
    );
    lines.push("|---|---|---|---|---|");
    for (const row of table.rows) {
      const get = (c: string) => Number(row[table.header.indexOf(c)]);
      const params = cols.slice(0, 6).map((c) => get(c).toFixed(1)).join(", ");
      const vals = ["fd_best", "fd_both", "hd_best", "hd_both"]
        .map((c) => get(c).toFixed(3))
        .join(" | ");
      lines.push(`| (${params}) | ${vals} |`);
    }
    lines.push("");
    return { kind: "md", content: lines.join("\n") + "\n" };
  },
};

export const FIGURES: FigureSpec[] = [fig4, fig5, fig6, fig7, fig8, fig9, fig10, table1];

export function figureById(id: string): FigureSpec {
  const spec = FIGURES.find((f) => f.id === id);
  if (!spec) {
    throw new Error(`unknown figure "${id}"; known: ${FIGURES.map((f) => f.id).join(", ")}`);
  }
  return spec;
}

export function renderFromText(spec: FigureSpec, text: string, source: string): Rendered {
  const table = parseCsv(text, source);
  return spec.render(table, source);
}
