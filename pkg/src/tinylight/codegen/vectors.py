"""Test-vector files: deterministic inputs plus 64-bit-computed reference
outputs, in a line-oriented text format shared with the verification harness.

Format:
    tlvec 1 <num_inputs> <dim0> <dim1> ... <out_dim> <count>
    <in0 values> <in1 values> ... <reference q values> <argmax>\\n   (per vector)
All numbers space-separated decimal; floats use %.9g (float32 round-trip).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import nn
from .options import VECTOR_MAGIC, CodegenOptions
from .reference import reference_forward


@dataclass
class TestVectorSet:
    input_dims: list[int]
    output_dim: int
    inputs: list[list[np.ndarray]]      # per vector, per feature
    references: list[np.ndarray]
    argmaxes: list[int]

    @property
    def count(self) -> int:
        return len(self.inputs)


def _fmt(x: float) -> str:
    return f"{np.float32(x):.9g}"


def emit_test_vectors(sub, opts: CodegenOptions, seed: int) -> TestVectorSet:
    """Inputs come from recorded simulator states when provided, otherwise
    uniform draws in the calibrated (or unit) ranges. Deterministic per seed."""
    rng = np.random.default_rng(seed)
    count = opts.test_vector_count
    inputs: list[list[np.ndarray]] = []
    if opts.calibration_states:
        pool = opts.calibration_states
        for _ in range(count):
            state = pool[int(rng.integers(len(pool)))]
            inputs.append([np.asarray(x, dtype=np.float64) for x in state])
    else:
        ranges = opts.input_ranges or [(0.0, 1.0)] * len(sub.input_dims)
        for _ in range(count):
            inputs.append([rng.uniform(lo, hi, size=d)
                           for d, (lo, hi) in zip(sub.input_dims, ranges)])
    references, argmaxes = [], []
    for state in inputs:
        q = reference_forward(sub, state)
        references.append(q)
        argmaxes.append(nn.argmax_tie_low(q))
    return TestVectorSet(input_dims=list(sub.input_dims),
                         output_dim=sub.output_dim, inputs=inputs,
                         references=references, argmaxes=argmaxes)


def write_vectors(vs: TestVectorSet, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        dims = " ".join(str(d) for d in vs.input_dims)
        fh.write(f"{VECTOR_MAGIC} 1 {len(vs.input_dims)} {dims} "
                 f"{vs.output_dim} {vs.count}\n")
        for state, ref, am in zip(vs.inputs, vs.references, vs.argmaxes):
            cells = []
            for x in state:
                cells.extend(_fmt(v) for v in x)
            cells.extend(_fmt(v) for v in ref)
            cells.append(str(am))
            fh.write(" ".join(cells) + "\n")


def read_vectors(path: str) -> TestVectorSet:
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().split()
        if not header or header[0] != VECTOR_MAGIC or header[1] != "1":
            raise ValueError(f"{path}: not a {VECTOR_MAGIC} v1 file")
        n_inputs = int(header[2])
        dims = [int(x) for x in header[3:3 + n_inputs]]
        out_dim = int(header[3 + n_inputs])
        count = int(header[4 + n_inputs])
        vs = TestVectorSet(input_dims=dims, output_dim=out_dim,
                           inputs=[], references=[], argmaxes=[])
        for _ in range(count):
            cells = fh.readline().split()
            pos = 0
            state = []
            for d in dims:
                state.append(np.array([float(c) for c in cells[pos:pos + d]],
                                      dtype=np.float64))
                pos += d
            ref = np.array([float(c) for c in cells[pos:pos + out_dim]],
                           dtype=np.float64)
            pos += out_dim
            vs.inputs.append(state)
            vs.references.append(ref)
            vs.argmaxes.append(int(cells[pos]))
        return vs
