"""Codegen tests: strict-flag compilation, float32 equivalence, q15 behavior."""

import shutil
import subprocess

import numpy as np
import pytest

from tinylight import codegen
from tinylight.codegen import (CodegenOptions, activation_buffer_bytes, emit_c,
                               emit_test_vectors, parse_marker, quantize_q15,
                               quantize_tensor, read_vectors, reference_forward,
                               sample_subgraph, static_data_bytes, tensor_scale,
                               write_vectors)
from tinylight.supergraph import SuperGraph, SuperGraphSpec, extract

GCC = shutil.which("gcc") or shutil.which("cc")
STRICT = ["-std=c99", "-pedantic", "-Wall", "-Wextra", "-Werror", "-O2"]

needs_cc = pytest.mark.skipif(GCC is None, reason="no host C compiler")


def small_subgraph(seed=0):
    spec = SuperGraphSpec(input_dims=(6, 4), hidden2=(8,), hidden3=(7,),
                          output_dim=5)
    return extract(SuperGraph(spec, seed=seed), keep=(2, 1, 1))


def driver_source(n_inputs: int, prefix: str = "tl") -> str:
    up = prefix.upper()
    reads = []
    for k in range(n_inputs):
        reads.append(
            f"            for (k = 0; k < {up}_IN{k}_DIM; ++k) {{\n"
            f"                if (scanf(\"%f\", &in{k}[k]) != 1) {{ return 2; }}\n"
            f"            }}")
    read_block = "\n".join(reads)
    decls = "\n".join(f"        static float in{k}[{up}_IN{k}_DIM];"
                      for k in range(n_inputs))
    call = ", ".join(f"in{k}" for k in range(n_inputs))
    header_dims = " ".join(["%d"] * n_inputs)
    dim_vars = ", ".join(f"&d{k}" for k in range(n_inputs))
    return f"""
#include <stdio.h>
#include "model.c"

int main(void)
{{
    char magic[16];
    int version, n_inputs, out_dim, count, v, k;
    int {", ".join(f"d{k}" for k in range(n_inputs))};
    if (scanf("%15s %d %d", magic, &version, &n_inputs) != 3) {{ return 2; }}
    if (scanf("{header_dims}", {dim_vars}) != {n_inputs}) {{ return 2; }}
    if (scanf("%d %d", &out_dim, &count) != 2) {{ return 2; }}
    {{
{decls}
        static float q[{up}_OUT_DIM];
        float ref;
        int am;
        for (v = 0; v < count; ++v) {{
{read_block}
            for (k = 0; k < {up}_OUT_DIM; ++k) {{
                if (scanf("%f", &ref) != 1) {{ return 2; }}
            }}
            if (scanf("%d", &am) != 1) {{ return 2; }}
            {prefix}_forward({call}, q);
            for (k = 0; k < {up}_OUT_DIM; ++k) {{
                printf("%.9g ", (double)q[k]);
            }}
            printf("%d\\n", {prefix}_argmax(q));
        }}
    }}
    return 0;
}}
"""


def compile_and_run(tmp_path, source: str, vectors_path: str, n_inputs: int):
    (tmp_path / "model.c").write_text(source)
    (tmp_path / "driver.c").write_text(driver_source(n_inputs))
    exe = tmp_path / "runner"
    subprocess.run([GCC, *STRICT, "-o", str(exe), str(tmp_path / "driver.c")],
                   check=True, capture_output=True, cwd=tmp_path)
    with open(vectors_path) as fh:
        proc = subprocess.run([str(exe)], stdin=fh, capture_output=True,
                              text=True, check=True)
    rows = []
    for line in proc.stdout.strip().splitlines():
        cells = line.split()
        rows.append((np.array([float(c) for c in cells[:-1]]), int(cells[-1])))
    return rows


# ------------------------------------------------------------------ marker

def test_marker_roundtrip():
    sub = small_subgraph()
    src = emit_c(sub, CodegenOptions(prefix="net"))
    info = parse_marker(src)
    assert info["prefix"] == "net"
    assert info["precision"] == "float32"
    assert info["in_dims"] == list(sub.input_dims)
    assert info["out"] == sub.output_dim
    assert info["params"] == sub.num_params()


def test_unsupported_options():
    with pytest.raises(ValueError):
        CodegenOptions(precision="float16")
    with pytest.raises(ValueError):
        CodegenOptions(prefix="9bad")


# ----------------------------------------------------------------- vectors

def test_vectors_deterministic_bytes(tmp_path):
    sub = small_subgraph()
    opts = CodegenOptions(test_vector_count=50)
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    write_vectors(emit_test_vectors(sub, opts, seed=9), str(a))
    write_vectors(emit_test_vectors(sub, opts, seed=9), str(b))
    assert a.read_bytes() == b.read_bytes()
    write_vectors(emit_test_vectors(sub, opts, seed=10), str(b))
    assert a.read_bytes() != b.read_bytes()


def test_vectors_zero_count_header_only(tmp_path):
    sub = small_subgraph()
    path = tmp_path / "v.txt"
    write_vectors(emit_test_vectors(sub, CodegenOptions(test_vector_count=0), 1),
                  str(path))
    lines = path.read_text().splitlines()
    assert len(lines) == 1
    assert lines[0].startswith("tlvec 1 2 6 4 5 0")


def test_vectors_roundtrip_and_double_evaluation(tmp_path):
    sub = small_subgraph()
    vs = emit_test_vectors(sub, CodegenOptions(test_vector_count=20), seed=3)
    path = tmp_path / "v.txt"
    write_vectors(vs, str(path))
    back = read_vectors(str(path))
    assert back.count == 20
    for state, ref in zip(back.inputs, back.references):
        again = reference_forward(sub, state)   # recompute independently
        assert np.allclose(again, ref, atol=2e-7)


# ----------------------------------------------------------------- float32

def test_all_zero_weights_bias_only():
    sub = small_subgraph()
    for name, arr in sub.param_arrays().items():
        if name.startswith("w"):
            arr[:] = 0.0
    sub.b_out[:] = np.arange(sub.output_dim, dtype=np.float64)
    q = reference_forward(sub, [np.ones(d) for d in sub.input_dims])
    assert np.allclose(q, np.arange(sub.output_dim), atol=1e-6)
    src = emit_c(sub)
    assert "tl_forward" in src


@needs_cc
def test_float32_c_matches_reference(tmp_path):
    sub = small_subgraph(seed=4)
    opts = CodegenOptions(test_vector_count=300)
    src = emit_c(sub, opts)
    vs = emit_test_vectors(sub, opts, seed=5)
    vpath = tmp_path / "v.txt"
    write_vectors(vs, str(vpath))
    rows = compile_and_run(tmp_path, src, str(vpath), n_inputs=2)
    assert len(rows) == 300
    max_diff = 0.0
    for (qc, amc), ref, am in zip(rows, vs.references, vs.argmaxes):
        max_diff = max(max_diff, float(np.max(np.abs(qc - ref))))
        top2 = np.sort(ref)[-2:]
        if top2[1] - top2[0] > 1e-4:
            assert amc == am
    assert max_diff <= 1e-5


@needs_cc
def test_generated_file_compiles_standalone(tmp_path):
    sub = small_subgraph(seed=6)
    (tmp_path / "model.c").write_text(emit_c(sub))
    subprocess.run([GCC, *STRICT, "-c", "-o", str(tmp_path / "m.o"),
                    str(tmp_path / "model.c")], check=True, capture_output=True)


# --------------------------------------------------------------------- q15

def calibration_for(sub, n=150, seed=0):
    rng = np.random.default_rng(seed)
    return [[rng.uniform(0, 1, size=d) for d in sub.input_dims] for _ in range(n)]


def test_tensor_scale_integer_roundtrip():
    w = np.array([[-3.0, 2.0], [1.0, 0.0]])
    s = tensor_scale(w)
    assert s == 1.0
    assert np.array_equal(quantize_tensor(w, s).astype(np.float64) * s, w)


def test_quantize_requires_calibration():
    sub = small_subgraph()
    with pytest.raises(ValueError, match="100"):
        quantize_q15(sub, calibration_for(sub, n=10))


def test_q15_argmax_agreement():
    sub = small_subgraph(seed=7)
    calib = calibration_for(sub, n=200, seed=8)
    qsub = quantize_q15(sub, calib)
    held_out = calibration_for(sub, n=1000, seed=9)
    agree = 0
    for state in held_out:
        q_float = reference_forward(sub, state)
        q_int = qsub.forward_q(qsub.quantize_inputs(state))
        agree += int(np.argmax(q_float) == np.argmax(q_int))
    assert agree / len(held_out) >= 0.99


def test_q15_static_data_halves():
    sub = sample_subgraph()
    assert static_data_bytes(sub, "float32") == 4_004
    assert static_data_bytes(sub, "q15") == 2_002


@needs_cc
def test_q15_c_matches_integer_simulator(tmp_path):
    sub = small_subgraph(seed=10)
    calib = calibration_for(sub, n=120, seed=11)
    opts = CodegenOptions(precision="q15", calibration_states=calib,
                          test_vector_count=200)
    qsub = quantize_q15(sub, calib)
    src = emit_c(sub, opts)
    assert "#include <stdint.h>" in src
    vs = emit_test_vectors(sub, CodegenOptions(test_vector_count=200), seed=12)
    vpath = tmp_path / "v.txt"
    write_vectors(vs, str(vpath))
    rows = compile_and_run(tmp_path, src, str(vpath), n_inputs=2)
    for (qc, _), state in zip(rows, vs.inputs):
        state32 = [np.asarray(x, dtype=np.float32) for x in state]
        expect = qsub.forward_dequant(state32)
        assert np.allclose(qc, expect, atol=1e-6)


# --------------------------------------------------------------- footprint

def test_reference_instance_footprint_budgets():
    sub = sample_subgraph()
    assert sub.num_params() == 1_001
    assert static_data_bytes(sub, "float32") == 4_004
    assert static_data_bytes(sub, "float32") <= codegen.ROM_BUDGET_BYTES
    assert activation_buffer_bytes(sub, "float32") <= codegen.RAM_BUDGET_BYTES
    assert activation_buffer_bytes(sub, "q15") <= codegen.RAM_BUDGET_BYTES


def test_default_spec_worst_case_budgets():
    # widest possible extraction from the 37-feature catalog on the reference
    # intersection: the two largest feature dims with the widest blocks
    spec = SuperGraphSpec(input_dims=(72, 64), hidden2=(24,), hidden3=(24,),
                          output_dim=9)
    sub = extract(SuperGraph(spec, seed=0), keep=(2, 1, 1))
    assert static_data_bytes(sub, "float32") <= codegen.ROM_BUDGET_BYTES
    assert activation_buffer_bytes(sub, "float32") <= codegen.RAM_BUDGET_BYTES
