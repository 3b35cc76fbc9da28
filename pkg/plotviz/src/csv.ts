/** Minimal CSV handling for the solver's numeric output files. */

export interface Table {
  columns: string[];
  /** column name -> values, one entry per data row */
  data: Map<string, number[]>;
  rows: number;
}

export function parseCsv(text: string): Table {
  const lines = text
    .split(/\r?\n/)
    .map((l) => l.trim())
    .filter((l) => l.length > 0);
  if (lines.length < 1) {
    throw new Error("empty CSV");
  }
  const columns = lines[0].split(",").map((c) => c.trim());
  const data = new Map<string, number[]>(columns.map((c) => [c, []]));
  for (const line of lines.slice(1)) {
    const parts = line.split(",");
    if (parts.length !== columns.length) {
      throw new Error(
        `row has ${parts.length} fields, header has ${columns.length}: ${line}`
      );
    }
    parts.forEach((p, i) => {
      const v = p.trim() === "" ? NaN : Number(p);
      data.get(columns[i])!.push(v);
    });
  }
  return { columns, data, rows: lines.length - 1 };
}

/** Column accessor that names the missing column in its error. */
export function column(table: Table, name: string, source = "input"): number[] {
  const values = table.data.get(name);
  if (values === undefined) {
    throw new Error(
      `column "${name}" not found in ${source} (have: ${table.columns.join(", ")})`
    );
  }
  return values;
}
