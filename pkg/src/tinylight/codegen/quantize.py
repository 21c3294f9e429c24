"""Post-training symmetric int16 quantization with integer-only inference.

Scheme: per-tensor scales s = maxabs/32767 (unit scale for degenerate or
already-integer tensors). Weights are int16; dot products accumulate in
int64; each layer requantizes to the next activation scale with an integer
multiplier/shift pair (M, S) plus a pre-shift that keeps the 32-bit stage in
range; biases are added post-requantization at the activation scale, so all
stored parameters are int16 (2 bytes each). The Python simulator below is
the bit-exact twin of the emitted C core.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .reference import export_arrays, reference_hidden_activations

QMAX = 32767
QMIN = -32768


def tensor_scale(values: np.ndarray) -> float:
    """Symmetric scale; 1.0 for all-zero or integer-valued in-range tensors.

    Rounded to float32 so the scale a generated C file carries as a literal
    is the exact value the Python twin computes with."""
    m = float(np.max(np.abs(values))) if values.size else 0.0
    if m == 0.0:
        return 1.0
    if np.all(values == np.round(values)) and m <= QMAX:
        return 1.0
    return float(np.float32(m / QMAX))


def quantize_tensor(values: np.ndarray, scale: float) -> np.ndarray:
    v = np.asarray(values, dtype=np.float64) / scale
    q = np.where(v >= 0, np.floor(v + 0.5), np.ceil(v - 0.5))
    return np.clip(q, QMIN, QMAX).astype(np.int16)


@dataclass
class Requant:
    """out = ((acc >> pre) * mult + (1 << (shift-1))) >> shift, all integer."""
    pre: int
    mult: int
    shift: int

    def apply(self, acc: np.ndarray) -> np.ndarray:
        acc32 = (acc >> self.pre).astype(np.int64)
        rounding = 1 << (self.shift - 1) if self.shift > 0 else 0
        return (acc32 * self.mult + rounding) >> self.shift


def make_requant(multiplier: float, acc_abs_max: int) -> Requant:
    """Integer multiplier/shift pair approximating the real requant factor."""
    pre = 0
    limit = 1 << 30
    while (max(acc_abs_max, 1) >> pre) > limit:
        pre += 1
    m_eff = multiplier * (1 << pre)
    shift = 30
    while shift > 0 and round(m_eff * (1 << shift)) >= (1 << 31):
        shift -= 1
    mult = int(round(m_eff * (1 << shift)))
    return Requant(pre=pre, mult=mult, shift=shift)


@dataclass
class QuantizedSubGraph:
    input_scales: list[float]
    h_scale: float
    h2_scale: float
    q_scale: float
    w_in_q: list[np.ndarray]
    b_in_q: list[np.ndarray]          # at h scale, int16
    w_mid_q: np.ndarray
    b_mid_q: np.ndarray               # at h2 scale
    w_out_q: np.ndarray
    b_out_q: np.ndarray               # at q scale
    rq_in: list[Requant] = field(default_factory=list)
    rq_mid: Requant | None = None
    rq_out: Requant | None = None

    def static_bytes(self) -> int:
        n = sum(a.size for a in self.w_in_q) + sum(a.size for a in self.b_in_q)
        n += self.w_mid_q.size + self.b_mid_q.size
        n += self.w_out_q.size + self.b_out_q.size
        return 2 * n

    def quantize_inputs(self, inputs: list[np.ndarray]) -> list[np.ndarray]:
        return [quantize_tensor(np.asarray(x, dtype=np.float32), s)
                for x, s in zip(inputs, self.input_scales)]

    def forward_q(self, inputs_q: list[np.ndarray]) -> np.ndarray:
        """Integer-only forward on quantized inputs; mirrors the emitted C."""
        single = inputs_q[0].ndim == 1
        xs = [np.atleast_2d(x).astype(np.int64) for x in inputs_q]
        h = None
        for x, wq, bq, rq in zip(xs, self.w_in_q, self.b_in_q, self.rq_in):
            acc = x @ wq.astype(np.int64)
            r = rq.apply(acc) + bq.astype(np.int64)
            r = np.maximum(r, 0)
            h = r if h is None else h + r
        h = np.clip(h, QMIN, QMAX)
        acc = h @ self.w_mid_q.astype(np.int64)
        h2 = self.rq_mid.apply(acc) + self.b_mid_q.astype(np.int64)
        h2 = np.clip(np.maximum(h2, 0), QMIN, QMAX)
        acc = h2 @ self.w_out_q.astype(np.int64)
        q = self.rq_out.apply(acc) + self.b_out_q.astype(np.int64)
        q = np.clip(q, QMIN, QMAX)
        return (q[0] if single else q).astype(np.int16)

    def forward_dequant(self, inputs: list[np.ndarray]) -> np.ndarray:
        return self.forward_q(self.quantize_inputs(inputs)).astype(np.float64) * self.q_scale


def quantize_q15(sub, calibration: list[list[np.ndarray]]) -> QuantizedSubGraph:
    """Calibrate scales on >=100 recorded states and build the integer model."""
    if len(calibration) < 100:
        raise ValueError(f"q15 calibration needs >= 100 states, got {len(calibration)}")
    mats = [np.stack([np.asarray(st[k], dtype=np.float64) for st in calibration])
            for k in range(len(sub.input_dims))]
    h, h2, q = reference_hidden_activations(sub, mats)
    arrs = export_arrays(sub)

    input_scales = [tensor_scale(m.astype(np.float32)) for m in mats]
    h_scale = tensor_scale(h)
    h2_scale = tensor_scale(h2)
    q_scale = tensor_scale(q)

    w_in_q, b_in_q, rq_in = [], [], []
    for k, s_x in enumerate(input_scales):
        w = arrs[f"w_in_{k}"]
        s_w = tensor_scale(w)
        wq = quantize_tensor(w, s_w)
        xq = quantize_tensor(mats[k].astype(np.float32), s_x).astype(np.int64)
        acc_max = int(np.max(np.abs(xq @ wq.astype(np.int64))))
        rq = make_requant(s_x * s_w / h_scale, acc_max)
        w_in_q.append(wq)
        b_in_q.append(quantize_tensor(arrs[f"b_in_{k}"], h_scale))
        rq_in.append(rq)

    s_wm = tensor_scale(arrs["w_mid"])
    w_mid_q = quantize_tensor(arrs["w_mid"], s_wm)
    h_q = quantize_tensor(h, h_scale).astype(np.int64)
    acc_mid = int(np.max(np.abs(h_q @ w_mid_q.astype(np.int64))))
    rq_mid = make_requant(h_scale * s_wm / h2_scale, acc_mid)
    b_mid_q = quantize_tensor(arrs["b_mid"], h2_scale)

    s_wo = tensor_scale(arrs["w_out"])
    w_out_q = quantize_tensor(arrs["w_out"], s_wo)
    h2_q = quantize_tensor(h2, h2_scale).astype(np.int64)
    acc_out = int(np.max(np.abs(h2_q @ w_out_q.astype(np.int64))))
    rq_out = make_requant(h2_scale * s_wo / q_scale, acc_out)
    b_out_q = quantize_tensor(arrs["b_out"], q_scale)

    return QuantizedSubGraph(
        input_scales=input_scales, h_scale=h_scale, h2_scale=h2_scale,
        q_scale=q_scale, w_in_q=w_in_q, b_in_q=b_in_q, w_mid_q=w_mid_q,
        b_mid_q=b_mid_q, w_out_q=w_out_q, b_out_q=b_out_q,
        rq_in=rq_in, rq_mid=rq_mid, rq_out=rq_out)
