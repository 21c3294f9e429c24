"""Pure-numpy reference kernels for the batched super-graph forward/backward.

The forward rule per layer transition: output of component j is the sum over
previous-layer components i of alpha_i * ReLU(Linear(o_i)); the final layer
is a plain linear head (no ReLU), matching the deployed network's structure.

`forward_cached` keeps every per-edge activation so `backward` can produce
exact gradients for the flat theta vector and for the raw alpha weights of
all three layers in one sweep. The numba twin in kernels_numba.py computes
identical quantities; tests pin them together.
"""

from __future__ import annotations

import numpy as np

from .spec import PackedLayout


def _edge_wb(theta, w_off, b_off, fin, fout):
    wt = theta[w_off:w_off + fin * fout].reshape(fout, fin)
    b = theta[b_off:b_off + fout]
    return wt, b


def forward(X: np.ndarray, theta: np.ndarray, layout: PackedLayout,
            a1: np.ndarray, a2: np.ndarray, a3: np.ndarray) -> np.ndarray:
    """Batched forward without caches; X is (n, sum of input dims)."""
    q, _ = forward_cached(X, theta, layout, a1, a2, a3)
    return q


def forward_cached(X, theta, layout, a1, a2, a3):
    n = X.shape[0]
    l1, l2, l3 = layout.alpha_sizes
    p = layout.p

    cache_a = [[None] * l1 for _ in range(l2)]
    h2_out = []
    for j in range(l2):
        hj = int(layout.h2[j])
        acc = np.zeros((n, hj))
        for i in range(l1):
            f = int(layout.in_dims[i])
            o = int(layout.in_off[i])
            wt, b = _edge_wb(theta, int(layout.aw[i, j]), int(layout.ab[i, j]), f, hj)
            act = np.maximum(X[:, o:o + f] @ wt.T + b, 0.0)
            cache_a[j][i] = act
            acc += a1[i] * act
        h2_out.append(acc)

    cache_b = [[None] * l2 for _ in range(l3)]
    h3_out = []
    for j in range(l3):
        hj = int(layout.h3[j])
        acc = np.zeros((n, hj))
        for i in range(l2):
            f = int(layout.h2[i])
            wt, b = _edge_wb(theta, int(layout.bw[i, j]), int(layout.bb[i, j]), f, hj)
            act = np.maximum(h2_out[i] @ wt.T + b, 0.0)
            cache_b[j][i] = act
            acc += a2[i] * act
        h3_out.append(acc)

    z_head = []
    q = np.zeros((n, p))
    for i in range(l3):
        f = int(layout.h3[i])
        wt, b = _edge_wb(theta, int(layout.cw[i]), int(layout.cb[i]), f, p)
        z = h3_out[i] @ wt.T + b
        z_head.append(z)
        q += a3[i] * z

    return q, (cache_a, h2_out, cache_b, h3_out, z_head)


def backward(X, theta, layout, a1, a2, a3, caches, d_q):
    """Gradients of a scalar loss with upstream d_q = dL/dQ (n, p).

    Returns (d_theta, d_alpha1, d_alpha2, d_alpha3) where the alpha gradients
    are with respect to the raw (post-softmax) alpha values.
    """
    cache_a, h2_out, cache_b, h3_out, z_head = caches
    l1, l2, l3 = layout.alpha_sizes
    p = layout.p

    d_theta = np.zeros_like(theta)
    d_a1 = np.zeros(l1)
    d_a2 = np.zeros(l2)
    d_a3 = np.zeros(l3)

    d_h3 = [np.zeros_like(h) for h in h3_out]
    for i in range(l3):
        f = int(layout.h3[i])
        wt, _ = _edge_wb(theta, int(layout.cw[i]), int(layout.cb[i]), f, p)
        d_a3[i] = float(np.sum(d_q * z_head[i]))
        dz = a3[i] * d_q
        w0, b0 = int(layout.cw[i]), int(layout.cb[i])
        d_theta[w0:w0 + f * p] += (dz.T @ h3_out[i]).reshape(-1)
        d_theta[b0:b0 + p] += dz.sum(axis=0)
        d_h3[i] = dz @ wt

    d_h2 = [np.zeros_like(h) for h in h2_out]
    for j in range(l3):
        hj = int(layout.h3[j])
        for i in range(l2):
            f = int(layout.h2[i])
            act = cache_b[j][i]
            d_a2[i] += float(np.sum(d_h3[j] * act))
            dpre = (a2[i] * d_h3[j]) * (act > 0.0)
            wt, _ = _edge_wb(theta, int(layout.bw[i, j]), int(layout.bb[i, j]), f, hj)
            w0, b0 = int(layout.bw[i, j]), int(layout.bb[i, j])
            d_theta[w0:w0 + f * hj] += (dpre.T @ h2_out[i]).reshape(-1)
            d_theta[b0:b0 + hj] += dpre.sum(axis=0)
            d_h2[i] += dpre @ wt

    for j in range(l2):
        hj = int(layout.h2[j])
        for i in range(l1):
            f = int(layout.in_dims[i])
            o = int(layout.in_off[i])
            act = cache_a[j][i]
            d_a1[i] += float(np.sum(d_h2[j] * act))
            dpre = (a1[i] * d_h2[j]) * (act > 0.0)
            w0, b0 = int(layout.aw[i, j]), int(layout.ab[i, j])
            d_theta[w0:w0 + f * hj] += (dpre.T @ X[:, o:o + f]).reshape(-1)
            d_theta[b0:b0 + hj] += dpre.sum(axis=0)

    return d_theta, d_a1, d_a2, d_a3
