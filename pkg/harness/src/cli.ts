#!/usr/bin/env node
// mcu-harness: compile a generated C inference source with strict ISO flags,
// run it over a test-vector file, print a one-line JSON verdict on stdout.
// Exit code 0 iff the comparison passes.

import { cleanup, compileModel, runModel } from "./compile.js";
import { compare } from "./compare.js";
import { parseMarker } from "./marker.js";
import { parseVectors } from "./vectors.js";

interface Args {
  source?: string;
  vectors?: string;
  tolerance: number;
  margin: number;
  keepTemp: boolean;
}

function parseArgs(argv: string[]): Args {
  const args: Args = { tolerance: 1e-5, margin: 1e-4, keepTemp: false };
  for (let i = 0; i < argv.length; i++) {
    switch (argv[i]) {
      case "--source":
        args.source = argv[++i];
        break;
      case "--vectors":
        args.vectors = argv[++i];
        break;
      case "--tolerance":
        args.tolerance = Number(argv[++i]);
        break;
      case "--margin":
        args.margin = Number(argv[++i]);
        break;
      case "--keep-temp":
        args.keepTemp = true;
        break;
      case "--help":
        console.log(
          "usage: mcu-harness --source model.c --vectors vectors.txt " +
          "[--tolerance 1e-5] [--margin 1e-4] [--keep-temp]");
        process.exit(0);
        break;
      default:
        throw new Error(`unknown argument ${argv[i]}`);
    }
  }
  if (!args.source || !args.vectors) {
    throw new Error("--source and --vectors are required");
  }
  return args;
}

function main(): number {
  let args: Args;
  try {
    args = parseArgs(process.argv.slice(2));
  } catch (err) {
    console.log(JSON.stringify({ error: String(err instanceof Error ? err.message : err) }));
    return 1;
  }
  try {
    const info = parseMarker(args.source!);
    const set = parseVectors(args.vectors!);
    if (set.inputDims.join(",") !== info.inDims.join(",") ||
        set.outDim !== info.outDim) {
      throw new Error(
        `dimension mismatch: model ${info.inDims.join(",")}->${info.outDim}, ` +
        `vectors ${set.inputDims.join(",")}->${set.outDim}`);
    }
    const compiled = compileModel(args.source!, info, args.keepTemp);
    if (!compiled.ok) {
      console.log(JSON.stringify({
        error: "compile failed",
        compilerOutput: compiled.compilerOutput,
      }));
      process.stderr.write(compiled.compilerOutput);
      return 1;
    }
    try {
      const outputs = runModel(compiled.exePath!, args.vectors!, set.outDim);
      const result = compare(set, outputs, info.precision, args.tolerance,
                             args.margin);
      console.log(JSON.stringify(result));
      return result.pass ? 0 : 1;
    } finally {
      if (!args.keepTemp) {
        cleanup(compiled);
      } else {
        process.stderr.write(`work dir kept: ${compiled.workDir}\n`);
      }
    }
  } catch (err) {
    console.log(JSON.stringify({ error: String(err instanceof Error ? err.message : err) }));
    return 1;
  }
}

process.exit(main());
