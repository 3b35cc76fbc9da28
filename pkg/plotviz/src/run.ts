/** Recipe-file execution: load CSVs, render, write the SVG. */

import { readFileSync, writeFileSync } from "node:fs";
import path from "node:path";

import { parseCsv } from "./csv.js";
import { NamedTable, Recipe, inputPaths, renderFigure } from "./figures.js";

/** Paths inside the recipe resolve relative to the recipe file's directory. */
export function runRecipeFile(recipePath: string): string {
  const raw = readFileSync(recipePath, "utf-8");
  const recipe = JSON.parse(raw) as Recipe;
  const base = path.dirname(path.resolve(recipePath));
  const resolve = (p: string) => (path.isAbsolute(p) ? p : path.join(base, p));
  const tables: NamedTable[] = inputPaths(recipe).map((p) => {
    const full = resolve(p);
    return {
      name: path.basename(full),
      table: parseCsv(readFileSync(full, "utf-8")),
    };
  });
  const svg = renderFigure(recipe, tables);
  const outPath = resolve(recipe.output);
  writeFileSync(outPath, svg);
  return outPath;
}
