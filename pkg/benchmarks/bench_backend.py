#!/usr/bin/env python3
"""Benchmark the super-graph training kernels: numba backend vs numpy fallback.

The workload mirrors one search-phase training step at full catalog size
(37 feature components, 5+5 hidden blocks, batch 32): cached forward plus
backward for both the theta pass and the alpha pass, and a target forward.

Usage:
    python3 benchmarks/bench_backend.py [--steps 50] [--batch 32]
Select a single backend for a run via TINYLIGHT_BACKEND=numpy|numba.
"""

import argparse
import time

import numpy as np

from tinylight.supergraph import SuperGraph, SuperGraphSpec
from tinylight.supergraph import backend as backend_mod
from tinylight.supergraph import kernels as np_kernels

# Jinan-style catalog dims: 24-lane intersection, 9 phases, 36 links, K=3
CATALOG_DIMS = (24, 24, 24, 24, 72, 12, 12, 12, 12, 36, 12, 12, 12, 12, 12,
                36, 4, 4, 4, 4, 9, 9, 9, 9, 9, 1, 1, 1, 1, 1, 64, 9, 1, 1,
                1, 36, 36)


def train_step_workload(kern, sg, X, Xn, actions, rewards):
    a = sg.alphas()
    q_next = kern.forward(Xn, sg.theta, sg.layout, *a)
    targets = rewards + 0.9 * q_next.max(axis=1)
    for _ in range(2):                      # theta pass, then alpha pass
        q, caches = kern.forward_cached(X, sg.theta, sg.layout, *a)
        rows = np.arange(X.shape[0])
        err = q[rows, actions] - targets
        d_q = np.zeros_like(q)
        d_q[rows, actions] = 2.0 * err / X.shape[0]
        kern.backward(X, sg.theta, sg.layout, *a, caches, d_q)


def bench(kern, name, steps, batch):
    spec = SuperGraphSpec(input_dims=CATALOG_DIMS, output_dim=9)
    sg = SuperGraph(spec, seed=0)
    rng = np.random.default_rng(0)
    total = sum(CATALOG_DIMS)
    X = rng.uniform(0, 1, size=(batch, total))
    Xn = rng.uniform(0, 1, size=(batch, total))
    X1 = rng.uniform(0, 1, size=(1, total))
    actions = rng.integers(0, 9, size=batch)
    rewards = rng.normal(size=batch)
    a = sg.alphas()

    train_step_workload(kern, sg, X, Xn, actions, rewards)   # warm-up / JIT
    t0 = time.perf_counter()
    for _ in range(steps):
        train_step_workload(kern, sg, X, Xn, actions, rewards)
    dt_train = (time.perf_counter() - t0) / steps

    kern.forward(X1, sg.theta, sg.layout, *a)
    t0 = time.perf_counter()
    for _ in range(steps * 10):
        kern.forward(X1, sg.theta, sg.layout, *a)
    dt_act = (time.perf_counter() - t0) / (steps * 10)

    print(f"{name:>6}: {dt_train * 1000:8.2f} ms / train step (batch {batch}),"
          f" {dt_act * 1000:7.3f} ms / single-state forward")
    return dt_train, dt_act


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--steps", type=int, default=50)
    parser.add_argument("--batch", type=int, default=32)
    args = parser.parse_args()

    np_train, np_act = bench(np_kernels, "numpy", args.steps, args.batch)
    if backend_mod.HAS_NUMBA:
        from tinylight.supergraph import kernels_numba as nb_kernels
        nb_train, nb_act = bench(nb_kernels, "numba", args.steps, args.batch)
        print(f"numba speedup: {np_train / nb_train:.2f}x batched train step, "
              f"{np_act / nb_act:.1f}x acting forward")
    else:
        print("numba not importable; only the numpy fallback was measured")


if __name__ == "__main__":
    main()
