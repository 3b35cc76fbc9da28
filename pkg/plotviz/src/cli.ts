#!/usr/bin/env node
/** weno7-plot <recipe.json> - render one SVG figure from solver CSV output. */

import { runRecipeFile } from "./run.js";

function main(argv: string[]): number {
  if (argv.length === 1 && (argv[0] === "-h" || argv[0] === "--help")) {
    console.log("usage: weno7-plot <recipe.json>");
    return 0;
  }
  if (argv.length !== 1) {
    console.error("usage: weno7-plot <recipe.json>");
    return 2;
  }
  try {
    const out = runRecipeFile(argv[0]);
    console.log(`wrote ${out}`);
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    return 1;
  }
}

process.exit(main(process.argv.slice(2)));
