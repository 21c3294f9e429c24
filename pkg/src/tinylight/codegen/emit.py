"""Standalone C source emission for extracted sub-graphs.

Generated file contract (consumed by the verification harness):
  - line 1 marker: /* tinylight-codegen v1 prefix=<p> precision=<float32|q15>
    in_dims=<d0,d1,...> h1=<n> h2=<n> out=<n> params=<n> */
  - dims as #define <PREFIX>_IN<k>_DIM / _H1_DIM / _H2_DIM / _OUT_DIM
  - public entry points: void <prefix>_forward(const float *in0, ...,
    float *q_out) and (optionally) int <prefix>_argmax(const float *q).
    The q15 variant additionally exposes <prefix>_forward_q15 on int16
    buffers; its <prefix>_forward wrapper quantizes/dequantizes with the
    published scales so the float API is uniform across precisions.
Weights live in static const arrays (ROM); scratch buffers are fixed-size
stack arrays; no heap, no libm, loop bounds are compile-time constants.
"""

from __future__ import annotations

import numpy as np

from .options import MARKER, MARKER_VERSION, CodegenOptions
from .quantize import QuantizedSubGraph, quantize_q15
from .reference import export_arrays


def fmt_f32(value: float) -> str:
    text = f"{np.float32(value):.9g}"
    if "." not in text and "e" not in text and "inf" not in text:
        text += ".0"
    return text + "f"


def _array_lines(name: str, ctype: str, values, fmt) -> list[str]:
    flat = list(values)
    lines = [f"static const {ctype} {name}[{len(flat)}] = {{"]
    for k in range(0, len(flat), 8):
        chunk = ", ".join(fmt(v) for v in flat[k:k + 8])
        tail = "," if k + 8 < len(flat) else ""
        lines.append(f"    {chunk}{tail}")
    lines.append("};")
    return lines


def _marker(sub, opts: CodegenOptions) -> str:
    dims = ",".join(str(d) for d in sub.input_dims)
    return (f"/* {MARKER} v{MARKER_VERSION} prefix={opts.prefix} "
            f"precision={opts.precision} in_dims={dims} h1={sub.hidden2} "
            f"h2={sub.hidden3} out={sub.output_dim} params={sub.num_params()} */")


def parse_marker(source: str) -> dict:
    line = source.splitlines()[0]
    if MARKER not in line:
        raise ValueError("missing codegen marker line")
    fields = {}
    for token in line.strip("/* ").split():
        if "=" in token:
            key, val = token.split("=", 1)
            fields[key] = val
    fields["in_dims"] = [int(x) for x in fields["in_dims"].split(",")]
    for key in ("h1", "h2", "out", "params"):
        fields[key] = int(fields[key])
    return fields


def static_data_bytes(sub, precision: str = "float32") -> int:
    if precision == "float32":
        return 4 * sub.num_params()
    return 2 * sub.num_params()


def activation_buffer_bytes(sub, precision: str = "float32") -> int:
    if precision == "float32":
        return 4 * (sub.hidden2 + sub.hidden3)
    ins = sum(sub.input_dims)
    return 2 * (sub.hidden2 + sub.hidden3 + ins + sub.output_dim)


def _signature(prefix: str, n_inputs: int) -> str:
    args = ", ".join(f"const float *in{k}" for k in range(n_inputs))
    return f"void {prefix}_forward({args}, float *q_out)"


def _emit_argmax(prefix: str, up: str) -> list[str]:
    return [
        f"int {prefix}_argmax(const float *q)",
        "{",
        "    int best = 0;",
        "    int k;",
        f"    for (k = 1; k < {up}_OUT_DIM; ++k) {{",
        "        if (q[k] > q[best]) {",
        "            best = k;",
        "        }",
        "    }",
        "    return best;",
        "}",
    ]


def emit_c_float32(sub, opts: CodegenOptions) -> str:
    arrs = export_arrays(sub)
    p, up = opts.prefix, opts.prefix.upper()
    n_in = len(sub.input_dims)
    out = [_marker(sub, opts),
           "/* Generated standalone forward pass: linear / ReLU / elementwise sum only. */",
           ""]
    for k, d in enumerate(sub.input_dims):
        out.append(f"#define {up}_IN{k}_DIM {d}")
    out.append(f"#define {up}_H1_DIM {sub.hidden2}")
    out.append(f"#define {up}_H2_DIM {sub.hidden3}")
    out.append(f"#define {up}_OUT_DIM {sub.output_dim}")
    out.append("")
    for k in range(n_in):
        out += _array_lines(f"{p}_w_in{k}", "float",
                            arrs[f"w_in_{k}"].reshape(-1), fmt_f32)
        out += _array_lines(f"{p}_b_in{k}", "float", arrs[f"b_in_{k}"], fmt_f32)
    out += _array_lines(f"{p}_w_mid", "float", arrs["w_mid"].reshape(-1), fmt_f32)
    out += _array_lines(f"{p}_b_mid", "float", arrs["b_mid"], fmt_f32)
    out += _array_lines(f"{p}_w_out", "float", arrs["w_out"].reshape(-1), fmt_f32)
    out += _array_lines(f"{p}_b_out", "float", arrs["b_out"], fmt_f32)
    out.append("")
    out.append(_signature(p, n_in))
    out.append("{")
    out.append(f"    float h1[{up}_H1_DIM];")
    out.append(f"    float h2[{up}_H2_DIM];")
    out.append("    int i;")
    out.append("    int j;")
    out.append(f"    for (j = 0; j < {up}_H1_DIM; ++j) {{")
    out.append("        float s = 0.0f;")
    for k in range(n_in):
        out.append("        {")
        out.append(f"            double acc = (double){p}_b_in{k}[j];")
        out.append(f"            for (i = 0; i < {up}_IN{k}_DIM; ++i) {{")
        out.append(f"                acc += (double)in{k}[i] * "
                   f"(double){p}_w_in{k}[i * {up}_H1_DIM + j];")
        out.append("            }")
        out.append("            s += acc > 0.0 ? (float)acc : 0.0f;")
        out.append("        }")
    out.append("        h1[j] = s;")
    out.append("    }")
    out.append(f"    for (j = 0; j < {up}_H2_DIM; ++j) {{")
    out.append(f"        double acc = (double){p}_b_mid[j];")
    out.append(f"        for (i = 0; i < {up}_H1_DIM; ++i) {{")
    out.append(f"            acc += (double)h1[i] * (double){p}_w_mid[i * {up}_H2_DIM + j];")
    out.append("        }")
    out.append("        h2[j] = acc > 0.0 ? (float)acc : 0.0f;")
    out.append("    }")
    out.append(f"    for (j = 0; j < {up}_OUT_DIM; ++j) {{")
    out.append(f"        double acc = (double){p}_b_out[j];")
    out.append(f"        for (i = 0; i < {up}_H2_DIM; ++i) {{")
    out.append(f"            acc += (double)h2[i] * (double){p}_w_out[i * {up}_OUT_DIM + j];")
    out.append("        }")
    out.append("        q_out[j] = (float)acc;")
    out.append("    }")
    out.append("}")
    if opts.emit_argmax:
        out.append("")
        out += _emit_argmax(p, up)
    out.append("")
    return "\n".join(out)


def emit_c_q15(sub, qsub: QuantizedSubGraph, opts: CodegenOptions) -> str:
    p, up = opts.prefix, opts.prefix.upper()
    n_in = len(sub.input_dims)
    out = [_marker(sub, opts),
           "/* Generated integer forward pass with float quantization wrapper. */",
           "",
           "#include <stdint.h>",
           ""]
    for k, d in enumerate(sub.input_dims):
        out.append(f"#define {up}_IN{k}_DIM {d}")
    out.append(f"#define {up}_H1_DIM {sub.hidden2}")
    out.append(f"#define {up}_H2_DIM {sub.hidden3}")
    out.append(f"#define {up}_OUT_DIM {sub.output_dim}")
    out.append("")
    for k, s in enumerate(qsub.input_scales):
        out.append(f"#define {up}_IN{k}_SCALE {fmt_f32(s)}")
    out.append(f"#define {up}_Q_SCALE {fmt_f32(qsub.q_scale)}")
    out.append("")

    def rq_defines(tag, rq):
        return [f"#define {up}_RQ_{tag}_PRE {rq.pre}",
                f"#define {up}_RQ_{tag}_MULT {rq.mult}",
                f"#define {up}_RQ_{tag}_SHIFT {rq.shift}"]

    for k, rq in enumerate(qsub.rq_in):
        out += rq_defines(f"IN{k}", rq)
    out += rq_defines("MID", qsub.rq_mid)
    out += rq_defines("OUT", qsub.rq_out)
    out.append("")

    fmt_i = str
    for k in range(n_in):
        out += _array_lines(f"{p}_w_in{k}_q", "int16_t",
                            qsub.w_in_q[k].reshape(-1), fmt_i)
        out += _array_lines(f"{p}_b_in{k}_q", "int16_t", qsub.b_in_q[k], fmt_i)
    out += _array_lines(f"{p}_w_mid_q", "int16_t", qsub.w_mid_q.reshape(-1), fmt_i)
    out += _array_lines(f"{p}_b_mid_q", "int16_t", qsub.b_mid_q, fmt_i)
    out += _array_lines(f"{p}_w_out_q", "int16_t", qsub.w_out_q.reshape(-1), fmt_i)
    out += _array_lines(f"{p}_b_out_q", "int16_t", qsub.b_out_q, fmt_i)

    out += [
        "",
        f"static int16_t {p}_sat16(int64_t v)",
        "{",
        "    if (v > 32767) {",
        "        return 32767;",
        "    }",
        "    if (v < -32768) {",
        "        return -32768;",
        "    }",
        "    return (int16_t)v;",
        "}",
        "",
        f"static int64_t {p}_requant(int64_t acc, int pre, int64_t mult, int shift)",
        "{",
        "    int64_t staged = acc >> pre;",
        "    int64_t rounding = shift > 0 ? ((int64_t)1 << (shift - 1)) : 0;",
        "    return (staged * mult + rounding) >> shift;",
        "}",
        "",
        f"static int16_t {p}_quantize(float v, float scale)",
        "{",
        "    double x = (double)v / (double)scale;",
        "    int32_t r = x >= 0.0 ? (int32_t)(x + 0.5) : (int32_t)(x - 0.5);",
        "    if (r > 32767) {",
        "        r = 32767;",
        "    }",
        "    if (r < -32768) {",
        "        r = -32768;",
        "    }",
        "    return (int16_t)r;",
        "}",
        "",
    ]

    args_q = ", ".join(f"const int16_t *in{k}" for k in range(n_in))
    out.append(f"void {p}_forward_q15({args_q}, int16_t *q_out)")
    out.append("{")
    out.append(f"    int16_t h1[{up}_H1_DIM];")
    out.append(f"    int16_t h2[{up}_H2_DIM];")
    out.append("    int i;")
    out.append("    int j;")
    out.append(f"    for (j = 0; j < {up}_H1_DIM; ++j) {{")
    out.append("        int64_t s = 0;")
    for k in range(n_in):
        out.append("        {")
        out.append("            int64_t acc = 0;")
        out.append("            int64_t v;")
        out.append(f"            for (i = 0; i < {up}_IN{k}_DIM; ++i) {{")
        out.append(f"                acc += (int64_t)in{k}[i] * "
                   f"(int64_t){p}_w_in{k}_q[i * {up}_H1_DIM + j];")
        out.append("            }")
        out.append(f"            v = {p}_requant(acc, {up}_RQ_IN{k}_PRE, "
                   f"{up}_RQ_IN{k}_MULT, {up}_RQ_IN{k}_SHIFT) + {p}_b_in{k}_q[j];")
        out.append("            if (v < 0) {")
        out.append("                v = 0;")
        out.append("            }")
        out.append("            s += v;")
        out.append("        }")
    out.append(f"        h1[j] = {p}_sat16(s);")
    out.append("    }")
    out.append(f"    for (j = 0; j < {up}_H2_DIM; ++j) {{")
    out.append("        int64_t acc = 0;")
    out.append("        int64_t v;")
    out.append(f"        for (i = 0; i < {up}_H1_DIM; ++i) {{")
    out.append(f"            acc += (int64_t)h1[i] * (int64_t){p}_w_mid_q[i * {up}_H2_DIM + j];")
    out.append("        }")
    out.append(f"        v = {p}_requant(acc, {up}_RQ_MID_PRE, {up}_RQ_MID_MULT, "
               f"{up}_RQ_MID_SHIFT) + {p}_b_mid_q[j];")
    out.append("        if (v < 0) {")
    out.append("            v = 0;")
    out.append("        }")
    out.append(f"        h2[j] = {p}_sat16(v);")
    out.append("    }")
    out.append(f"    for (j = 0; j < {up}_OUT_DIM; ++j) {{")
    out.append("        int64_t acc = 0;")
    out.append("        int64_t v;")
    out.append(f"        for (i = 0; i < {up}_H2_DIM; ++i) {{")
    out.append(f"            acc += (int64_t)h2[i] * (int64_t){p}_w_out_q[i * {up}_OUT_DIM + j];")
    out.append("        }")
    out.append(f"        v = {p}_requant(acc, {up}_RQ_OUT_PRE, {up}_RQ_OUT_MULT, "
               f"{up}_RQ_OUT_SHIFT) + {p}_b_out_q[j];")
    out.append(f"        q_out[j] = {p}_sat16(v);")
    out.append("    }")
    out.append("}")
    out.append("")

    out.append(_signature(p, n_in))
    out.append("{")
    for k in range(n_in):
        out.append(f"    int16_t q{k}[{up}_IN{k}_DIM];")
    out.append(f"    int16_t qq[{up}_OUT_DIM];")
    out.append("    int i;")
    for k in range(n_in):
        out.append(f"    for (i = 0; i < {up}_IN{k}_DIM; ++i) {{")
        out.append(f"        q{k}[i] = {p}_quantize(in{k}[i], {up}_IN{k}_SCALE);")
        out.append("    }")
    call_args = ", ".join(f"q{k}" for k in range(n_in))
    out.append(f"    {p}_forward_q15({call_args}, qq);")
    out.append(f"    for (i = 0; i < {up}_OUT_DIM; ++i) {{")
    out.append(f"        q_out[i] = (float)qq[i] * {up}_Q_SCALE;")
    out.append("    }")
    out.append("}")
    if opts.emit_argmax:
        out.append("")
        out += _emit_argmax(p, up)
    out.append("")
    return "\n".join(out)


def emit_c(sub, opts: CodegenOptions | None = None) -> str:
    """Emit the standalone C source for one sub-graph per the options."""
    opts = opts or CodegenOptions()
    if opts.precision == "float32":
        return emit_c_float32(sub, opts)
    if not opts.calibration_states or len(opts.calibration_states) < 100:
        raise ValueError("q15 emission needs calibration_states (>= 100)")
    qsub = quantize_q15(sub, opts.calibration_states)
    return emit_c_q15(sub, qsub, opts)
