#!/usr/bin/env python3
"""Regenerate test fixtures by driving the primary package's codegen CLI.

Produces, under test/fixtures/:
    float32_model.c / float32_vectors.txt
    q15_model.c / q15_vectors.txt     (calibrated on deterministic states)
    corrupted_model.c                 (one weight constant perturbed)
    empty_vectors.txt
"""

import json
import os
import re
import subprocess
import sys
import tempfile

import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "test", "fixtures")
REPO = os.path.abspath(os.path.join(HERE, "..", ".."))


def cli(*argv):
    subprocess.run([sys.executable, "-m", "tinylight.cli", *argv],
                   check=True, cwd=REPO)


def main():
    os.makedirs(FIXTURES, exist_ok=True)
    sys.path.insert(0, os.path.join(REPO, "src"))
    from tinylight.codegen import sample_subgraph

    with tempfile.TemporaryDirectory() as tmp:
        ck = os.path.join(tmp, "sub.json")
        sample_subgraph(seed=7).save(ck)

        rng = np.random.default_rng(42)
        sub = sample_subgraph(seed=7)
        states = [[rng.uniform(0, 1, size=d).tolist() for d in sub.input_dims]
                  for _ in range(200)]
        calib = os.path.join(tmp, "calib.json")
        with open(calib, "w") as fh:
            json.dump({"states": states}, fh)

        out32 = os.path.join(tmp, "f32")
        cli("codegen", "--checkpoint", ck, "--out", out32,
            "--precision", "float32", "--vectors", "1000", "--seed", "3")
        outq = os.path.join(tmp, "q15")
        cli("codegen", "--checkpoint", ck, "--out", outq,
            "--precision", "q15", "--vectors", "1000", "--seed", "3",
            "--calibration", calib)

        for src, dst in [
            (os.path.join(out32, "tl_model.c"), "float32_model.c"),
            (os.path.join(out32, "tl_vectors.txt"), "float32_vectors.txt"),
            (os.path.join(outq, "tl_model.c"), "q15_model.c"),
            (os.path.join(outq, "tl_vectors.txt"), "q15_vectors.txt"),
        ]:
            with open(src) as fh:
                text = fh.read()
            with open(os.path.join(FIXTURES, dst), "w", newline="\n") as fh:
                fh.write(text)

    with open(os.path.join(FIXTURES, "float32_model.c")) as fh:
        source = fh.read()
    # flip the first weight constant's sign and size to force argmax breaks
    corrupted = re.sub(r"(\{\n    )(-?\d+\.\d+(?:e[+-]?\d+)?f)",
                       lambda m: f"{m.group(1)}{'9.0e+02f'}", source, count=1)
    assert corrupted != source, "corruption pattern did not match"
    with open(os.path.join(FIXTURES, "corrupted_model.c"), "w", newline="\n") as fh:
        fh.write(corrupted)

    header = open(os.path.join(FIXTURES, "float32_vectors.txt")).readline()
    parts = header.split()
    parts[-1] = "0"
    with open(os.path.join(FIXTURES, "empty_vectors.txt"), "w", newline="\n") as fh:
        fh.write(" ".join(parts) + "\n")
    print("fixtures written to", os.path.abspath(FIXTURES))


if __name__ == "__main__":
    main()
