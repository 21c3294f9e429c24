// Generated-source contract: line 1 carries a machine-readable marker, e.g.
// /* tinylight-codegen v1 prefix=tl precision=float32 in_dims=12,10 h1=18 h2=20 out=9 params=1001 */

import { readFileSync } from "node:fs";

export interface ModelInfo {
  prefix: string;
  precision: "float32" | "q15";
  inDims: number[];
  h1: number;
  h2: number;
  outDim: number;
  params: number;
}

export function parseMarker(sourcePath: string): ModelInfo {
  const first = readFileSync(sourcePath, "utf-8").split(/\r?\n/, 1)[0];
  if (!first.includes("tinylight-codegen")) {
    throw new Error(`${sourcePath}: missing codegen marker on line 1`);
  }
  const fields = new Map<string, string>();
  for (const token of first.split(/\s+/)) {
    const eq = token.indexOf("=");
    if (eq > 0) {
      fields.set(token.slice(0, eq), token.slice(eq + 1));
    }
  }
  const need = (key: string): string => {
    const v = fields.get(key);
    if (v === undefined) {
      throw new Error(`${sourcePath}: marker missing ${key}`);
    }
    return v;
  };
  const precision = need("precision");
  if (precision !== "float32" && precision !== "q15") {
    throw new Error(`${sourcePath}: unsupported precision ${precision}`);
  }
  return {
    prefix: need("prefix"),
    precision,
    inDims: need("in_dims").split(",").map((x) => parseInt(x, 10)),
    h1: parseInt(need("h1"), 10),
    h2: parseInt(need("h2"), 10),
    outDim: parseInt(need("out"), 10),
    params: parseInt(need("params"), 10),
  };
}
