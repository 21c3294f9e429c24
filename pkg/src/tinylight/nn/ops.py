"""Plain-array primitives: linear, ReLU, softmax, entropy, TD loss.

All inputs/outputs are float64 numpy arrays; vectors may be batched by a
leading axis where noted. These are the only operation kinds the deployed
network is allowed to contain (plus element-wise summation).
"""

from __future__ import annotations

import numpy as np


def linear(x: np.ndarray, weight: np.ndarray, bias: np.ndarray) -> np.ndarray:
    """y = x @ W + b with W of shape (fin, fout); x may be (fin,) or (batch, fin)."""
    x = np.asarray(x, dtype=np.float64)
    if weight.ndim != 2 or bias.shape != (weight.shape[1],):
        raise ValueError(f"bad parameter shapes W{weight.shape} b{bias.shape}")
    if x.shape[-1] != weight.shape[0]:
        raise ValueError(f"input dim {x.shape[-1]} != weight fin {weight.shape[0]}")
    return x @ weight + bias


def relu(x: np.ndarray) -> np.ndarray:
    return np.maximum(np.asarray(x, dtype=np.float64), 0.0)


def softmax(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=np.float64)
    if not np.all(np.isfinite(z)):
        raise ValueError("softmax input must be finite")
    shifted = z - z.max(axis=-1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=-1, keepdims=True)


def entropy(p: np.ndarray) -> float:
    """-sum p log p with 0*log(0) := 0; input must be a probability vector."""
    p = np.asarray(p, dtype=np.float64)
    if abs(p.sum() - 1.0) > 1e-6 or np.any(p < -1e-12):
        raise ValueError(f"entropy input is not a probability vector (sum={p.sum()})")
    pc = np.clip(p, 0.0, 1.0)
    terms = np.where(pc > 0.0, pc * np.log(np.where(pc > 0.0, pc, 1.0)), 0.0)
    return float(-terms.sum())


def td_loss(q: np.ndarray, a: int, r: float, q_next_target: np.ndarray,
            done: bool, gamma: float = 0.9) -> float:
    """(r + gamma * max(q_next_target) * (1-done) - q[a])^2; the target term is
    a constant with respect to any differentiation of q."""
    q = np.asarray(q, dtype=np.float64)
    if not 0 <= a < q.shape[-1]:
        raise ValueError(f"action {a} out of range for {q.shape[-1]} phases")
    target = r + gamma * float(np.max(q_next_target)) * (0.0 if done else 1.0)
    return float((target - q[a]) ** 2)


def argmax_tie_low(q: np.ndarray) -> int:
    """Index of the maximum; ties resolve to the lowest index."""
    return int(np.argmax(q))
