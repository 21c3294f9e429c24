"""Reference forward with the exact numeric semantics of the generated C:
float32 weights and activations, float64 dot-product accumulation."""

from __future__ import annotations

import numpy as np


def export_arrays(sub) -> dict[str, np.ndarray]:
    """The sub-graph's parameters at export (float32) precision."""
    return {name: arr.astype(np.float32) for name, arr in sub.param_arrays().items()}


def reference_forward(sub, inputs: list[np.ndarray]) -> np.ndarray:
    """Batched or single forward matching the emitted float32 code bit-for-bit
    up to accumulation-order rounding (double accumulators both sides)."""
    arrs = export_arrays(sub)
    single = np.asarray(inputs[0]).ndim == 1
    parts = []
    for k in range(len(sub.input_dims)):
        x32 = np.asarray(inputs[k], dtype=np.float32)
        x = np.atleast_2d(x32).astype(np.float64)
        w = arrs[f"w_in_{k}"].astype(np.float64)
        b = arrs[f"b_in_{k}"].astype(np.float64)
        parts.append(np.maximum(x @ w + b, 0.0).astype(np.float32))
    h = parts[0]
    for part in parts[1:]:
        h = h + part                                  # float32 elementwise sum
    z2 = (h.astype(np.float64) @ arrs["w_mid"].astype(np.float64)
          + arrs["b_mid"].astype(np.float64))
    h2 = np.maximum(z2, 0.0).astype(np.float32)
    q = (h2.astype(np.float64) @ arrs["w_out"].astype(np.float64)
         + arrs["b_out"].astype(np.float64)).astype(np.float32)
    return q[0] if single else q


def reference_hidden_activations(sub, inputs: list[np.ndarray]):
    """(h, h2, q) float32 activations, for calibration statistics."""
    arrs = export_arrays(sub)
    parts = []
    for k in range(len(sub.input_dims)):
        x = np.atleast_2d(np.asarray(inputs[k], dtype=np.float32)).astype(np.float64)
        w = arrs[f"w_in_{k}"].astype(np.float64)
        b = arrs[f"b_in_{k}"].astype(np.float64)
        parts.append(np.maximum(x @ w + b, 0.0).astype(np.float32))
    h = parts[0]
    for part in parts[1:]:
        h = h + part
    z2 = (h.astype(np.float64) @ arrs["w_mid"].astype(np.float64)
          + arrs["b_mid"].astype(np.float64))
    h2 = np.maximum(z2, 0.0).astype(np.float32)
    q = (h2.astype(np.float64) @ arrs["w_out"].astype(np.float64)
         + arrs["b_out"].astype(np.float64)).astype(np.float32)
    return h, h2, q
