"""Optimizers over lists of parameter arrays: Adam (default) and plain SGD."""

from __future__ import annotations

import numpy as np


class Adam:
    def __init__(self, params: list[np.ndarray], lr: float = 1e-3,
                 beta1: float = 0.9, beta2: float = 0.999, eps: float = 1e-8):
        self.lr, self.beta1, self.beta2, self.eps = lr, beta1, beta2, eps
        self.step_count = 0
        self.m = [np.zeros_like(p) for p in params]
        self.v = [np.zeros_like(p) for p in params]

    def step(self, params: list[np.ndarray], grads: list[np.ndarray]) -> None:
        self.step_count += 1
        b1, b2 = self.beta1, self.beta2
        bias1 = 1.0 - b1 ** self.step_count
        bias2 = 1.0 - b2 ** self.step_count
        for p, g, m, v in zip(params, grads, self.m, self.v):
            if p.shape != g.shape:
                raise ValueError(f"gradient shape {g.shape} != parameter shape {p.shape}")
            m *= b1
            m += (1.0 - b1) * g
            v *= b2
            v += (1.0 - b2) * g * g
            p -= self.lr * (m / bias1) / (np.sqrt(v / bias2) + self.eps)

    def state_dict(self) -> dict:
        return {"kind": "adam", "lr": self.lr, "beta1": self.beta1,
                "beta2": self.beta2, "eps": self.eps, "step": self.step_count,
                "m": [m.tolist() for m in self.m], "v": [v.tolist() for v in self.v]}


class SGD:
    def __init__(self, params: list[np.ndarray], lr: float = 1e-3):
        self.lr = lr
        self.step_count = 0

    def step(self, params: list[np.ndarray], grads: list[np.ndarray]) -> None:
        self.step_count += 1
        for p, g in zip(params, grads):
            if p.shape != g.shape:
                raise ValueError(f"gradient shape {g.shape} != parameter shape {p.shape}")
            p -= self.lr * g

    def state_dict(self) -> dict:
        return {"kind": "sgd", "lr": self.lr, "step": self.step_count}


def make_optimizer(kind: str, params: list[np.ndarray], lr: float = 1e-3):
    if kind == "adam":
        return Adam(params, lr=lr)
    if kind == "sgd":
        return SGD(params, lr=lr)
    raise ValueError(f"unknown optimizer kind {kind!r}")


def glorot_uniform(rng: np.random.Generator, fin: int, fout: int) -> np.ndarray:
    bound = np.sqrt(6.0 / (fin + fout))
    return rng.uniform(-bound, bound, size=(fin, fout))
