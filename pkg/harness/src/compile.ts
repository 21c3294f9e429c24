// Driver generation and strict-flag compilation of the model under test.
// The driver reads a vector file, calls <prefix>_forward per vector through
// the uniform float API, and prints outputs for the comparator.

import { spawnSync } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync, copyFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import type { ModelInfo } from "./marker.js";

export const STRICT_FLAGS = ["-std=c99", "-pedantic", "-Wall", "-Wextra", "-Werror", "-O2"];

export function driverSource(info: ModelInfo): string {
  const n = info.inDims.length;
  const decls = info.inDims
    .map((d, k) => `    static float in${k}[${d}];`)
    .join("\n");
  const reads = info.inDims
    .map(
      (d, k) => `        for (i = 0; i < ${d}; ++i) {
            if (fscanf(fh, "%f", &in${k}[i]) != 1) { return 3; }
        }`,
    )
    .join("\n");
  const callArgs = Array.from({ length: n }, (_, k) => `in${k}`).join(", ");
  return `#include <stdio.h>
#include "model_under_test.c"

int main(int argc, char **argv)
{
    FILE *fh;
    char magic[16];
    int version, numInputs, outDim, count, v, i, dim, am;
    float ref;
${decls}
    static float q[${info.outDim}];
    if (argc != 2) { return 2; }
    fh = fopen(argv[1], "r");
    if (fh == NULL) { return 2; }
    if (fscanf(fh, "%15s %d %d", magic, &version, &numInputs) != 3) { return 3; }
    for (i = 0; i < numInputs; ++i) {
        if (fscanf(fh, "%d", &dim) != 1) { return 3; }
    }
    if (fscanf(fh, "%d %d", &outDim, &count) != 2) { return 3; }
    if (outDim != ${info.outDim}) { return 4; }
    for (v = 0; v < count; ++v) {
${reads}
        for (i = 0; i < outDim; ++i) {
            if (fscanf(fh, "%f", &ref) != 1) { return 3; }
        }
        if (fscanf(fh, "%d", &am) != 1) { return 3; }
        ${info.prefix}_forward(${callArgs}, q);
        for (i = 0; i < outDim; ++i) {
            printf("%.9g ", (double)q[i]);
        }
        printf("\\n");
    }
    fclose(fh);
    return 0;
}
`;
}

export interface CompileResult {
  ok: boolean;
  exePath?: string;
  workDir: string;
  compilerOutput: string;
}

export function compilerCommand(): string {
  return process.env.CC ?? "cc";
}

export function compileModel(sourcePath: string, info: ModelInfo,
                             keepTemp = false): CompileResult {
  const workDir = mkdtempSync(join(tmpdir(), "mcu-harness-"));
  copyFileSync(sourcePath, join(workDir, "model_under_test.c"));
  writeFileSync(join(workDir, "driver.c"), driverSource(info));
  const exePath = join(workDir, "runner");
  const proc = spawnSync(
    compilerCommand(),
    [...STRICT_FLAGS, "-o", exePath, join(workDir, "driver.c")],
    { encoding: "utf-8" },
  );
  const output = `${proc.stdout ?? ""}${proc.stderr ?? ""}`;
  if (proc.status !== 0) {
    if (!keepTemp) {
      rmSync(workDir, { recursive: true, force: true });
    }
    return { ok: false, workDir, compilerOutput: output };
  }
  return { ok: true, exePath, workDir, compilerOutput: output };
}

export function runModel(exePath: string, vectorsPath: string,
                         outDim: number): number[][] {
  const proc = spawnSync(exePath, [vectorsPath], {
    encoding: "utf-8",
    maxBuffer: 1 << 28,
  });
  if (proc.status !== 0) {
    throw new Error(`model runner exited with status ${proc.status}`);
  }
  const rows: number[][] = [];
  for (const line of proc.stdout.split(/\r?\n/)) {
    const cells = line.trim().split(/\s+/).filter((c) => c.length > 0);
    if (cells.length === 0) {
      continue;
    }
    if (cells.length !== outDim) {
      throw new Error(`runner emitted ${cells.length} values, expected ${outDim}`);
    }
    rows.push(cells.map(Number));
  }
  return rows;
}

export function cleanup(result: CompileResult): void {
  rmSync(result.workDir, { recursive: true, force: true });
}
