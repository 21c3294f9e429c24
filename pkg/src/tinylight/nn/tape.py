"""Reverse-mode autodiff over a dynamically recorded op graph.

Forward calls build `Node`s holding values plus closures for the reverse
sweep; `backward(loss)` topologically orders the recorded ops and visits each
exactly once in reverse, accumulating gradients into `.grad`. Values are
float64 throughout; leading axes are treated as batch dimensions.
"""

from __future__ import annotations

import numpy as np

from . import ops


class Node:
    __slots__ = ("data", "grad", "parents", "backward_fn")

    def __init__(self, data, parents=(), backward_fn=None):
        self.data = np.asarray(data, dtype=np.float64)
        self.grad = None
        self.parents = parents
        self.backward_fn = backward_fn

    @property
    def shape(self):
        return self.data.shape


def leaf(data) -> Node:
    return Node(data)


def _accum(node: Node, g: np.ndarray) -> None:
    if node.grad is None:
        node.grad = np.zeros_like(node.data)
    node.grad += g


def t_linear(x: Node, w: Node, b: Node) -> Node:
    y = ops.linear(x.data, w.data, b.data)
    out = Node(y, parents=(x, w, b))

    def bk(g):
        if x.data.ndim == 1:
            _accum(x, g @ w.data.T)
            _accum(w, np.outer(x.data, g))
            _accum(b, g)
        else:
            _accum(x, g @ w.data.T)
            _accum(w, x.data.T @ g)
            _accum(b, g.sum(axis=0))
    out.backward_fn = bk
    return out


def t_relu(x: Node) -> Node:
    out = Node(ops.relu(x.data), parents=(x,))
    mask = (x.data > 0.0).astype(np.float64)
    out.backward_fn = lambda g: _accum(x, g * mask)
    return out


def t_softmax(z: Node) -> Node:
    p = ops.softmax(z.data)
    out = Node(p, parents=(z,))

    def bk(g):
        dot = (g * p).sum(axis=-1, keepdims=True)
        _accum(z, p * (g - dot))
    out.backward_fn = bk
    return out


def t_entropy(p: Node) -> Node:
    val = ops.entropy(p.data)
    out = Node(val, parents=(p,))
    pc = np.clip(p.data, 1e-300, 1.0)
    out.backward_fn = lambda g: _accum(p, g * (-(np.log(pc) + 1.0)))
    return out


def t_add(a: Node, b: Node) -> Node:
    out = Node(a.data + b.data, parents=(a, b))

    def bk(g):
        _accum(a, g)
        _accum(b, g)
    out.backward_fn = bk
    return out


def t_scale(x: Node, c: float) -> Node:
    out = Node(x.data * c, parents=(x,))
    out.backward_fn = lambda g: _accum(x, g * c)
    return out


def t_sum(x: Node) -> Node:
    out = Node(x.data.sum(), parents=(x,))
    out.backward_fn = lambda g: _accum(x, np.full_like(x.data, float(g)))
    return out


def t_square_sum(x: Node) -> Node:
    out = Node((x.data ** 2).sum(), parents=(x,))
    out.backward_fn = lambda g: _accum(x, 2.0 * x.data * float(g))
    return out


def t_td_loss(q: Node, actions, rewards, q_next_target, dones,
              gamma: float = 0.9) -> Node:
    """Mean squared TD error over a batch. q: (batch, P) node; everything else
    is constant data. Also accepts the single-sample (P,) layout."""
    if q.data.ndim == 1:
        qb = q.data[None, :]
        actions = np.array([actions])
        rewards = np.array([float(rewards)])
        q_next = np.asarray(q_next_target, dtype=np.float64)[None, :]
        dones = np.array([1.0 if dones else 0.0])
    else:
        qb = q.data
        actions = np.asarray(actions, dtype=np.int64)
        rewards = np.asarray(rewards, dtype=np.float64)
        q_next = np.asarray(q_next_target, dtype=np.float64)
        dones = np.asarray(dones, dtype=np.float64)
    n = qb.shape[0]
    rows = np.arange(n)
    targets = rewards + gamma * q_next.max(axis=1) * (1.0 - dones)
    err = qb[rows, actions] - targets
    out = Node((err ** 2).mean(), parents=(q,))

    def bk(g):
        dq = np.zeros_like(qb)
        dq[rows, actions] = 2.0 * err / n * float(g)
        _accum(q, dq if q.data.ndim > 1 else dq[0])
    out.backward_fn = bk
    return out


def backward(loss: Node) -> None:
    """Reverse sweep from a scalar loss; fills .grad on every reachable node."""
    if loss.data.ndim != 0:
        raise ValueError("backward expects a scalar loss node")
    order: list[Node] = []
    seen: set[int] = set()
    stack = [(loss, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for p in node.parents:
            if id(p) not in seen:
                stack.append((p, False))
    loss.grad = np.ones_like(loss.data)
    for node in reversed(order):
        if node.backward_fn is not None and node.grad is not None:
            node.backward_fn(node.grad)


def gradients(loss: Node, params: list[Node]) -> list[np.ndarray]:
    backward(loss)
    return [p.grad if p.grad is not None else np.zeros_like(p.data) for p in params]
