// Numeric agreement between the compiled model's outputs and the reference
// values frozen in the vector file.

import type { VectorSet } from "./vectors.js";

export interface HarnessResult {
  vectors: number;
  maxAbsDiff: number;
  argmaxMismatches: number;
  argmaxAgreement: number;
  precision: string;
  tolerance: number;
  margin: number;
  pass: boolean;
  warning?: string;
}

export function argmaxLowTie(values: number[]): number {
  let best = 0;
  for (let k = 1; k < values.length; k++) {
    if (values[k] > values[best]) {
      best = k;
    }
  }
  return best;
}

function top2Margin(values: number[]): number {
  if (values.length < 2) {
    return Infinity;
  }
  const sorted = [...values].sort((a, b) => b - a);
  return sorted[0] - sorted[1];
}

export function compare(set: VectorSet, outputs: number[][], precision: string,
                        tolerance: number, margin: number): HarnessResult {
  if (outputs.length !== set.count) {
    throw new Error(`runner produced ${outputs.length} rows for ${set.count} vectors`);
  }
  let maxAbsDiff = 0;
  let mismatches = 0;        // float32 rule: only where the reference is decisive
  let agree = 0;             // q15 rule: agreement over every vector
  for (let v = 0; v < set.count; v++) {
    const ref = set.vectors[v].reference;
    const got = outputs[v];
    for (let k = 0; k < ref.length; k++) {
      const diff = Math.abs(got[k] - ref[k]);
      if (diff > maxAbsDiff) {
        maxAbsDiff = diff;
      }
    }
    const gotArg = argmaxLowTie(got);
    if (gotArg === set.vectors[v].argmax) {
      agree += 1;
    } else if (top2Margin(ref) > margin) {
      mismatches += 1;
    }
  }
  const agreement = set.count === 0 ? 1 : agree / set.count;
  let pass: boolean;
  if (precision === "q15") {
    pass = agreement >= 0.99;
  } else {
    pass = maxAbsDiff <= tolerance && mismatches === 0;
  }
  const result: HarnessResult = {
    vectors: set.count,
    maxAbsDiff,
    argmaxMismatches: mismatches,
    argmaxAgreement: agreement,
    precision,
    tolerance,
    margin,
    pass,
  };
  if (set.count === 0) {
    result.warning = "vector file contains no vectors";
  }
  return result;
}
