/** The five figure kinds rendered from solver CSV tables. */

import { contours } from "d3-contour";

import { Table, column } from "./csv.js";
import {
  Frame,
  SeriesStyle,
  axes,
  esc,
  extent,
  hline,
  legend,
  makeFrame,
  padded,
  polyline,
  svgDocument,
} from "./svg.js";

export type FigureKind = "overlay" | "zoom" | "weights" | "indicators" | "contour";

export interface ZoomWindow {
  x0: number;
  x1: number;
  y0: number;
  y1: number;
}

export interface Recipe {
  kind: FigureKind;
  input?: string;
  inputs?: string[];
  output: string;
  title?: string;
  /** y columns to draw (overlay/zoom); defaults to every non-x, non-ref column */
  columns?: string[];
  zoom?: ZoomWindow;
  levels?: number;
}

export interface NamedTable {
  name: string;
  table: Table;
}

const PALETTE = ["#4361ee", "#e63946", "#2d6a4f", "#f77f00", "#7b2cbf", "#118ab2"];
const REF_STYLE: SeriesStyle = { color: "#999999", width: 2.2 };
const IDEAL_WEIGHTS = [1 / 35, 12 / 35, 18 / 35, 4 / 35];

const WIDTH = 760;
const HEIGHT = 460;
const MARGIN = { left: 62, right: 20, top: 34, bottom: 46 };

export function inputPaths(recipe: Recipe): string[] {
  if (recipe.inputs && recipe.inputs.length > 0) return recipe.inputs;
  if (recipe.input) return [recipe.input];
  throw new Error("recipe needs an input (or inputs) CSV path");
}

export function validateRecipe(recipe: Recipe): void {
  const kinds: FigureKind[] = ["overlay", "zoom", "weights", "indicators", "contour"];
  if (!kinds.includes(recipe.kind)) {
    throw new Error(`unknown figure kind "${recipe.kind}"`);
  }
  if (!recipe.output) {
    throw new Error("recipe needs an output path");
  }
  inputPaths(recipe);
  if (recipe.kind === "zoom" && !recipe.zoom) {
    throw new Error("zoom figures need a zoom window {x0,x1,y0,y1}");
  }
}

interface Series {
  label: string;
  x: number[];
  y: number[];
  style: SeriesStyle;
  isRef: boolean;
}

function collectSeries(recipe: Recipe, tables: NamedTable[]): Series[] {
  const out: Series[] = [];
  let colorIdx = 0;
  for (const { name, table } of tables) {
    const xs = column(table, "x", name);
    let wanted: string[];
    if (recipe.columns && recipe.columns.length > 0) {
      wanted = recipe.columns.filter((c) => table.data.has(c));
      const missingEverywhere = recipe.columns.filter(
        (c) => !tables.some((t) => t.table.data.has(c))
      );
      if (missingEverywhere.length > 0) {
        // raise with the standard missing-column message
        column(table, missingEverywhere[0], name);
      }
    } else {
      wanted = table.columns.filter((c) => c !== "x" && c !== "y");
    }
    for (const col of wanted) {
      const isRef = col.endsWith("_ref");
      const label = tables.length > 1 ? `${col} (${name})` : col;
      out.push({
        label,
        x: xs,
        y: column(table, col, name),
        style: isRef
          ? REF_STYLE
          : { color: PALETTE[colorIdx++ % PALETTE.length], width: 1.4 },
        isRef,
      });
    }
  }
  // references render first so data curves sit on top
  out.sort((a, b) => Number(b.isRef) - Number(a.isRef));
  return out;
}

function drawSeriesPanel(
  frame: Frame,
  series: Series[],
  xLabel: string,
  yLabel: string,
  withLegend: boolean
): string {
  const clipId = `clip-${frame.left}-${frame.top}`;
  const parts = [
    axes(frame, xLabel, yLabel),
    `<clipPath id="${clipId}"><rect x="${frame.left}" y="${frame.top}" width="${frame.width}" height="${frame.height}"/></clipPath>`,
    `<g clip-path="url(#${clipId})">`,
  ];
  for (const s of series) {
    parts.push(polyline(frame, s.x, s.y, s.style));
  }
  parts.push(`</g>`);
  if (withLegend) {
    parts.push(legend(frame, series.map((s) => ({ label: s.label, style: s.style }))));
  }
  return parts.join("\n");
}

function seriesDomains(series: Series[], window?: ZoomWindow):
    { x: [number, number]; y: [number, number] } {
  if (window) {
    return { x: [window.x0, window.x1], y: [window.y0, window.y1] };
  }
  const xs = series.flatMap((s) => s.x);
  const ys = series.flatMap((s) => s.y);
  return { x: extent(xs), y: padded(extent(ys)) };
}

function titleText(recipe: Recipe, fallback: string): string {
  return `<text x="${WIDTH / 2}" y="20" font-size="14" text-anchor="middle">${esc(
    recipe.title ?? fallback
  )}</text>`;
}

function renderOverlay(recipe: Recipe, tables: NamedTable[]): string {
  const series = collectSeries(recipe, tables);
  const window = recipe.kind === "zoom" ? recipe.zoom : undefined;
  const dom = seriesDomains(series, window);
  const frame = makeFrame(
    dom.x, dom.y, MARGIN.left, MARGIN.top,
    WIDTH - MARGIN.left - MARGIN.right, HEIGHT - MARGIN.top - MARGIN.bottom
  );
  const parts = [
    titleText(recipe, recipe.kind === "zoom" ? "zoomed view" : "solution overlay"),
    drawSeriesPanel(frame, series, "x", "u", true),
  ];
  if (recipe.kind === "overlay" && recipe.zoom) {
    // inset zoom panel in the lower-left of the plot area
    const z = recipe.zoom;
    const iw = frame.width * 0.38;
    const ih = frame.height * 0.42;
    const ix = frame.left + 14;
    const iy = frame.top + frame.height - ih - 14;
    parts.push(
      `<rect x="${ix - 6}" y="${iy - 6}" width="${iw + 12}" height="${ih + 12}" fill="white" stroke="#666"/>`
    );
    const inset = makeFrame([z.x0, z.x1], [z.y0, z.y1], ix, iy, iw, ih);
    parts.push(drawSeriesPanel(inset, series, "", "", false));
    parts.push(
      `<text x="${ix + 4}" y="${iy + 12}" font-size="9" fill="#444">zoom [${z.x0}, ${z.x1}]</text>`
    );
  }
  return svgDocument(WIDTH, HEIGHT, parts.join("\n"));
}

function renderWeights(recipe: Recipe, tables: NamedTable[]): string {
  const { name, table } = tables[0];
  const xs = column(table, "x", name);
  const panelW = (WIDTH - MARGIN.left - MARGIN.right - 40) / 2;
  const panelH = (HEIGHT - MARGIN.top - MARGIN.bottom - 34) / 2;
  const parts = [titleText(recipe, "nonlinear weights vs ideal weights")];
  for (let k = 0; k < 4; k++) {
    const col = `omega${k}`;
    const ys = column(table, col, name);
    const left = MARGIN.left + (k % 2) * (panelW + 40);
    const top = MARGIN.top + Math.floor(k / 2) * (panelH + 34);
    const dom = padded(extent(ys.concat([IDEAL_WEIGHTS[k]])));
    const frame = makeFrame(extent(xs), dom, left, top, panelW, panelH);
    parts.push(
      axes(frame, "x", col),
      hline(frame, IDEAL_WEIGHTS[k], { color: "#999", dash: "5,3", width: 1.4 }),
      polyline(frame, xs, ys, { color: PALETTE[k], width: 1.2 })
    );
  }
  return svgDocument(WIDTH, HEIGHT, parts.join("\n"));
}

function renderIndicators(recipe: Recipe, tables: NamedTable[]): string {
  const { name, table } = tables[0];
  const xs = column(table, "x", name);
  const wanted =
    recipe.columns ?? table.columns.filter((c) => c !== "x");
  const series: Series[] = wanted.map((col, i) => ({
    label: col,
    x: xs,
    y: column(table, col, name),
    style: { color: PALETTE[i % PALETTE.length], width: 1.2 },
    isRef: false,
  }));
  const dom = seriesDomains(series);
  const frame = makeFrame(
    dom.x, dom.y, MARGIN.left, MARGIN.top,
    WIDTH - MARGIN.left - MARGIN.right, HEIGHT - MARGIN.top - MARGIN.bottom
  );
  const body = [
    titleText(recipe, "smoothness indicators"),
    drawSeriesPanel(frame, series, "x", "indicator", true),
  ];
  return svgDocument(WIDTH, HEIGHT, body.join("\n"));
}

function colormap(t: number): string {
  // compact viridis-like ramp
  const stops: Array<[number, number, number, number]> = [
    [0.0, 68, 1, 84],
    [0.25, 59, 82, 139],
    [0.5, 33, 145, 140],
    [0.75, 94, 201, 98],
    [1.0, 253, 231, 37],
  ];
  const tt = Math.min(1, Math.max(0, t));
  for (let i = 1; i < stops.length; i++) {
    if (tt <= stops[i][0]) {
      const [t0, r0, g0, b0] = stops[i - 1];
      const [t1, r1, g1, b1] = stops[i];
      const u = (tt - t0) / (t1 - t0);
      const mix = (a: number, b: number) => Math.round(a + (b - a) * u);
      return `rgb(${mix(r0, r1)},${mix(g0, g1)},${mix(b0, b1)})`;
    }
  }
  return "rgb(253,231,37)";
}

function renderContour(recipe: Recipe, tables: NamedTable[]): string {
  const { name, table } = tables[0];
  const xs = column(table, "x", name);
  const ys = column(table, "y", name);
  const vs = column(table, "rho", name);
  const ux = Array.from(new Set(xs)).sort((a, b) => a - b);
  const uy = Array.from(new Set(ys)).sort((a, b) => a - b);
  const nx = ux.length;
  const ny = uy.length;
  if (nx * ny !== vs.length) {
    throw new Error(`grid is not rectangular: ${nx} x ${ny} != ${vs.length} rows`);
  }
  // re-grid by index in case row order differs from y-outer/x-inner
  const xi = new Map(ux.map((v, i) => [v, i]));
  const yi = new Map(uy.map((v, i) => [v, i]));
  const grid = new Array<number>(nx * ny).fill(NaN);
  for (let r = 0; r < vs.length; r++) {
    grid[yi.get(ys[r])! * nx + xi.get(xs[r])!] = vs[r];
  }
  const [lo, hi] = extent(vs);
  const nLevels = recipe.levels ?? 21;
  const thresholds = Array.from(
    { length: nLevels },
    (_, i) => lo + ((i + 0.5) / nLevels) * (hi - lo)
  );
  const polys = contours().size([nx, ny]).thresholds(thresholds)(grid);

  const dx = nx > 1 ? ux[1] - ux[0] : 1;
  const dy = ny > 1 ? uy[1] - uy[0] : 1;
  const xEdges: [number, number] = [ux[0] - dx / 2, ux[nx - 1] + dx / 2];
  const yEdges: [number, number] = [uy[0] - dy / 2, uy[ny - 1] + dy / 2];
  const side = Math.min(
    WIDTH - MARGIN.left - MARGIN.right - 70,
    HEIGHT - MARGIN.top - MARGIN.bottom
  );
  const frame = makeFrame(xEdges, yEdges, MARGIN.left, MARGIN.top, side, side);
  const toPx = (pt: [number, number]): string => {
    const xd = xEdges[0] + (pt[0] / nx) * (xEdges[1] - xEdges[0]);
    const yd = yEdges[0] + (pt[1] / ny) * (yEdges[1] - yEdges[0]);
    return `${frame.x(xd).toFixed(2)},${frame.y(yd).toFixed(2)}`;
  };

  const parts = [titleText(recipe, "density contours")];
  for (const c of polys) {
    const t = (c.value - lo) / (hi - lo || 1);
    const d = c.coordinates
      .map((poly) =>
        poly
          .map((ring) => "M" + ring.map((p) => toPx(p as [number, number])).join("L") + "Z")
          .join("")
      )
      .join("");
    if (d.length > 0) {
      parts.push(`<path d="${d}" fill="${colormap(t)}" fill-rule="evenodd" stroke="none"/>`);
    }
  }
  parts.push(axes(frame, "x", "y"));
  // colorbar
  const cbx = frame.left + side + 18;
  const steps = 40;
  for (let i = 0; i < steps; i++) {
    const y0 = frame.top + side - ((i + 1) / steps) * side;
    parts.push(
      `<rect x="${cbx}" y="${y0}" width="14" height="${side / steps + 0.5}" fill="${colormap((i + 0.5) / steps)}"/>`
    );
  }
  parts.push(
    `<rect x="${cbx}" y="${frame.top}" width="14" height="${side}" fill="none" stroke="#333"/>`,
    `<text x="${cbx + 18}" y="${frame.top + side}" font-size="10">${lo.toPrecision(3)}</text>`,
    `<text x="${cbx + 18}" y="${frame.top + 8}" font-size="10">${hi.toPrecision(3)}</text>`
  );
  return svgDocument(WIDTH, HEIGHT, parts.join("\n"));
}

/** Render a recipe against already-loaded tables (pure). */
export function renderFigure(recipe: Recipe, tables: NamedTable[]): string {
  validateRecipe(recipe);
  if (tables.length === 0) {
    throw new Error("no input tables");
  }
  switch (recipe.kind) {
    case "overlay":
    case "zoom":
      return renderOverlay(recipe, tables);
    case "weights":
      return renderWeights(recipe, tables);
    case "indicators":
      return renderIndicators(recipe, tables);
    case "contour":
      return renderContour(recipe, tables);
  }
}
