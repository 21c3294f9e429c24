// Parser for the line-oriented test-vector format:
//   tlvec 1 <numInputs> <dim...> <outDim> <count>
//   <inputs...> <reference q...> <argmax>        (one line per vector)

import { readFileSync } from "node:fs";

export interface TestVector {
  inputs: number[][];
  reference: number[];
  argmax: number;
}

export interface VectorSet {
  inputDims: number[];
  outDim: number;
  count: number;
  vectors: TestVector[];
}

export function parseVectors(path: string): VectorSet {
  const text = readFileSync(path, "utf-8");
  const lines = text.split(/\r?\n/).filter((l) => l.trim().length > 0);
  if (lines.length === 0) {
    throw new Error(`${path}: empty file`);
  }
  const header = lines[0].trim().split(/\s+/);
  if (header[0] !== "tlvec" || header[1] !== "1") {
    throw new Error(`${path}: not a tlvec v1 file`);
  }
  const numInputs = parseInt(header[2], 10);
  const inputDims = header.slice(3, 3 + numInputs).map((x) => parseInt(x, 10));
  const outDim = parseInt(header[3 + numInputs], 10);
  const count = parseInt(header[4 + numInputs], 10);
  if (!Number.isFinite(outDim) || inputDims.some((d) => !Number.isFinite(d))) {
    throw new Error(`${path}: malformed header`);
  }
  if (lines.length - 1 < count) {
    throw new Error(`${path}: header claims ${count} vectors, found ${lines.length - 1}`);
  }
  const vectors: TestVector[] = [];
  const rowLen = inputDims.reduce((a, b) => a + b, 0) + outDim + 1;
  for (let v = 0; v < count; v++) {
    const cells = lines[1 + v].trim().split(/\s+/);
    if (cells.length !== rowLen) {
      throw new Error(`${path}: vector ${v} has ${cells.length} fields, expected ${rowLen}`);
    }
    let pos = 0;
    const inputs: number[][] = [];
    for (const d of inputDims) {
      inputs.push(cells.slice(pos, pos + d).map(Number));
      pos += d;
    }
    const reference = cells.slice(pos, pos + outDim).map(Number);
    pos += outDim;
    const argmax = parseInt(cells[pos], 10);
    if (inputs.flat().some((x) => !Number.isFinite(x)) ||
        reference.some((x) => !Number.isFinite(x))) {
      throw new Error(`${path}: vector ${v} has non-numeric fields`);
    }
    vectors.push({ inputs, reference, argmax });
  }
  return { inputDims, outDim, count, vectors };
}
