"""Numba-jitted twins of the numpy kernels, operating on packed arrays only.

Activations are cached in padded 4-D buffers (component-major, then batch,
then unit) sized by the widest block of each layer; the padding stays zero
and never contributes. Same accumulation order as the numpy reference, so
results agree to the last bit in practice (tests pin 1e-12).
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _forward_cached_impl(X, theta, in_off, in_dims, aw, ab, bw, bb, cw, cb,
                         h2, h3, p, a1, a2, a3):
    n = X.shape[0]
    l1 = in_dims.size
    l2 = h2.size
    l3 = h3.size
    h2m = int(np.max(h2))
    h3m = int(np.max(h3))

    cache_a = np.zeros((l2, l1, n, h2m))
    h2_out = np.zeros((l2, n, h2m))
    cache_b = np.zeros((l3, l2, n, h3m))
    h3_out = np.zeros((l3, n, h3m))
    z_head = np.zeros((l3, n, p))
    q = np.zeros((n, p))

    for j in range(l2):
        hj = int(h2[j])
        for i in range(l1):
            f = int(in_dims[i])
            o = int(in_off[i])
            w0 = int(aw[i, j])
            b0 = int(ab[i, j])
            for b in range(n):
                for h in range(hj):
                    acc = theta[b0 + h]
                    base = w0 + h * f
                    for d in range(f):
                        acc += X[b, o + d] * theta[base + d]
                    if acc > 0.0:
                        cache_a[j, i, b, h] = acc
                        h2_out[j, b, h] += a1[i] * acc

    for j in range(l3):
        hj = int(h3[j])
        for i in range(l2):
            f = int(h2[i])
            w0 = int(bw[i, j])
            b0 = int(bb[i, j])
            for b in range(n):
                for h in range(hj):
                    acc = theta[b0 + h]
                    base = w0 + h * f
                    for d in range(f):
                        acc += h2_out[i, b, d] * theta[base + d]
                    if acc > 0.0:
                        cache_b[j, i, b, h] = acc
                        h3_out[j, b, h] += a2[i] * acc

    for i in range(l3):
        f = int(h3[i])
        w0 = int(cw[i])
        b0 = int(cb[i])
        for b in range(n):
            for h in range(p):
                acc = theta[b0 + h]
                base = w0 + h * f
                for d in range(f):
                    acc += h3_out[i, b, d] * theta[base + d]
                z_head[i, b, h] = acc
                q[b, h] += a3[i] * acc

    return q, cache_a, h2_out, cache_b, h3_out, z_head


@njit(cache=True)
def _backward_impl(X, theta, in_off, in_dims, aw, ab, bw, bb, cw, cb,
                   h2, h3, p, a1, a2, a3,
                   cache_a, h2_out, cache_b, h3_out, z_head, d_q):
    n = X.shape[0]
    l1 = in_dims.size
    l2 = h2.size
    l3 = h3.size
    h2m = int(np.max(h2))
    h3m = int(np.max(h3))

    d_theta = np.zeros_like(theta)
    d_a1 = np.zeros(l1)
    d_a2 = np.zeros(l2)
    d_a3 = np.zeros(l3)
    d_h3 = np.zeros((l3, n, h3m))
    d_h2 = np.zeros((l2, n, h2m))

    for i in range(l3):
        f = int(h3[i])
        w0 = int(cw[i])
        b0 = int(cb[i])
        s = 0.0
        for b in range(n):
            for h in range(p):
                g = d_q[b, h]
                s += g * z_head[i, b, h]
                dz = a3[i] * g
                d_theta[b0 + h] += dz
                base = w0 + h * f
                for d in range(f):
                    d_theta[base + d] += dz * h3_out[i, b, d]
                    d_h3[i, b, d] += dz * theta[base + d]
        d_a3[i] = s

    for j in range(l3):
        hj = int(h3[j])
        for i in range(l2):
            f = int(h2[i])
            w0 = int(bw[i, j])
            b0 = int(bb[i, j])
            s = 0.0
            for b in range(n):
                for h in range(hj):
                    g = d_h3[j, b, h]
                    act = cache_b[j, i, b, h]
                    s += g * act
                    if act > 0.0:
                        dpre = a2[i] * g
                        d_theta[b0 + h] += dpre
                        base = w0 + h * f
                        for d in range(f):
                            d_theta[base + d] += dpre * h2_out[i, b, d]
                            d_h2[i, b, d] += dpre * theta[base + d]
            d_a2[i] += s

    for j in range(l2):
        hj = int(h2[j])
        for i in range(l1):
            f = int(in_dims[i])
            o = int(in_off[i])
            w0 = int(aw[i, j])
            b0 = int(ab[i, j])
            s = 0.0
            for b in range(n):
                for h in range(hj):
                    g = d_h2[j, b, h]
                    act = cache_a[j, i, b, h]
                    s += g * act
                    if act > 0.0:
                        dpre = a1[i] * g
                        d_theta[b0 + h] += dpre
                        base = w0 + h * f
                        for d in range(f):
                            d_theta[base + d] += dpre * X[b, o + d]
            d_a1[i] += s

    return d_theta, d_a1, d_a2, d_a3


def forward_cached(X, theta, layout, a1, a2, a3):
    out = _forward_cached_impl(X, theta, layout.in_off, layout.in_dims,
                               layout.aw, layout.ab, layout.bw, layout.bb,
                               layout.cw, layout.cb, layout.h2, layout.h3,
                               layout.p, a1, a2, a3)
    q = out[0]
    return q, out[1:]


def forward(X, theta, layout, a1, a2, a3):
    return forward_cached(X, theta, layout, a1, a2, a3)[0]


def backward(X, theta, layout, a1, a2, a3, caches, d_q):
    cache_a, h2_out, cache_b, h3_out, z_head = caches
    return _backward_impl(X, theta, layout.in_off, layout.in_dims,
                          layout.aw, layout.ab, layout.bw, layout.bb,
                          layout.cw, layout.cb, layout.h2, layout.h3,
                          layout.p, a1, a2, a3,
                          cache_a, h2_out, cache_b, h3_out, z_head, d_q)
