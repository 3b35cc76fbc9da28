/** Hand-rolled SVG building blocks: scales, ticks, axes, series. */

export interface Scale {
  (v: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  let [d0, d1] = domain;
  if (d0 === d1) {
    d0 -= 0.5;
    d1 += 0.5;
  }
  const k = (range[1] - range[0]) / (d1 - d0);
  const fn = ((v: number) => range[0] + (v - d0) * k) as Scale;
  fn.domain = [d0, d1];
  fn.range = range;
  return fn;
}

/** Round tick positions covering [min, max] (roughly `count` of them). */
export function niceTicks(min: number, max: number, count = 6): number[] {
  if (!(max > min)) {
    return [min];
  }
  const span = max - min;
  const step0 = span / Math.max(1, count);
  const mag = Math.pow(10, Math.floor(Math.log10(step0)));
  const norm = step0 / mag;
  const step = (norm >= 5 ? 5 : norm >= 2 ? 2 : 1) * mag;
  const start = Math.ceil(min / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= max + 1e-9 * span; v += step) {
    ticks.push(Math.abs(v) < 1e-12 * span ? 0 : v);
  }
  return ticks;
}

export function fmtTick(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(1);
  return String(Number(v.toPrecision(6)));
}

export function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export interface Frame {
  x: Scale;
  y: Scale;
  left: number;
  top: number;
  width: number;
  height: number;
}

export function makeFrame(
  xDomain: [number, number],
  yDomain: [number, number],
  left: number,
  top: number,
  width: number,
  height: number
): Frame {
  return {
    x: linearScale(xDomain, [left, left + width]),
    y: linearScale(yDomain, [top + height, top]),
    left,
    top,
    width,
    height,
  };
}

export function axes(f: Frame, xLabel: string, yLabel: string): string {
  const parts: string[] = [];
  parts.push(
    `<rect x="${f.left}" y="${f.top}" width="${f.width}" height="${f.height}" fill="none" stroke="#333" stroke-width="1"/>`
  );
  for (const t of niceTicks(f.x.domain[0], f.x.domain[1])) {
    const px = f.x(t);
    parts.push(
      `<line x1="${px}" y1="${f.top + f.height}" x2="${px}" y2="${f.top + f.height + 4}" stroke="#333"/>`,
      `<line x1="${px}" y1="${f.top}" x2="${px}" y2="${f.top + f.height}" stroke="#ddd" stroke-width="0.5"/>`,
      `<text x="${px}" y="${f.top + f.height + 16}" font-size="10" text-anchor="middle">${fmtTick(t)}</text>`
    );
  }
  for (const t of niceTicks(f.y.domain[0], f.y.domain[1])) {
    const py = f.y(t);
    parts.push(
      `<line x1="${f.left - 4}" y1="${py}" x2="${f.left}" y2="${py}" stroke="#333"/>`,
      `<line x1="${f.left}" y1="${py}" x2="${f.left + f.width}" y2="${py}" stroke="#ddd" stroke-width="0.5"/>`,
      `<text x="${f.left - 6}" y="${py + 3}" font-size="10" text-anchor="end">${fmtTick(t)}</text>`
    );
  }
  if (xLabel) {
    parts.push(
      `<text x="${f.left + f.width / 2}" y="${f.top + f.height + 32}" font-size="12" text-anchor="middle">${esc(xLabel)}</text>`
    );
  }
  if (yLabel) {
    const cx = f.left - 36;
    const cy = f.top + f.height / 2;
    parts.push(
      `<text x="${cx}" y="${cy}" font-size="12" text-anchor="middle" transform="rotate(-90 ${cx} ${cy})">${esc(yLabel)}</text>`
    );
  }
  return parts.join("\n");
}

export interface SeriesStyle {
  color: string;
  width?: number;
  dash?: string;
  markers?: boolean;
}

export function polyline(
  f: Frame,
  xs: number[],
  ys: number[],
  style: SeriesStyle
): string {
  const pts: string[] = [];
  const marks: string[] = [];
  for (let i = 0; i < xs.length; i++) {
    if (!isFinite(xs[i]) || !isFinite(ys[i])) continue;
    const px = f.x(xs[i]);
    const py = f.y(ys[i]);
    if (px < f.left - 0.5 || px > f.left + f.width + 0.5) continue;
    pts.push(`${px.toFixed(2)},${py.toFixed(2)}`);
    if (style.markers) {
      marks.push(`<circle cx="${px.toFixed(2)}" cy="${py.toFixed(2)}" r="1.8" fill="${style.color}"/>`);
    }
  }
  const dash = style.dash ? ` stroke-dasharray="${style.dash}"` : "";
  const line = `<polyline points="${pts.join(" ")}" fill="none" stroke="${style.color}" stroke-width="${style.width ?? 1.3}"${dash}/>`;
  return style.markers ? line + "\n" + marks.join("") : line;
}

export function hline(f: Frame, y: number, style: SeriesStyle): string {
  const py = f.y(y);
  const dash = style.dash ? ` stroke-dasharray="${style.dash}"` : "";
  return `<line x1="${f.left}" y1="${py}" x2="${f.left + f.width}" y2="${py}" stroke="${style.color}" stroke-width="${style.width ?? 1}"${dash}/>`;
}

export function legend(
  f: Frame,
  entries: Array<{ label: string; style: SeriesStyle }>
): string {
  const parts: string[] = [];
  let y = f.top + 14;
  const x = f.left + f.width - 150;
  for (const { label, style } of entries) {
    const dash = style.dash ? ` stroke-dasharray="${style.dash}"` : "";
    parts.push(
      `<line x1="${x}" y1="${y - 3}" x2="${x + 22}" y2="${y - 3}" stroke="${style.color}" stroke-width="${style.width ?? 1.5}"${dash}/>`,
      `<text x="${x + 28}" y="${y}" font-size="10">${esc(label)}</text>`
    );
    y += 14;
  }
  return parts.join("\n");
}

export function svgDocument(width: number, height: number, body: string): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
    `<rect width="${width}" height="${height}" fill="white"/>`,
    body,
    `</svg>`,
    "",
  ].join("\n");
}

export function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (!isFinite(v)) continue;
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (lo > hi) throw new Error("no finite values to plot");
  return [lo, hi];
}

export function padded(e: [number, number], frac = 0.06): [number, number] {
  const span = e[1] - e[0] || 1;
  return [e[0] - frac * span, e[1] + frac * span];
}
