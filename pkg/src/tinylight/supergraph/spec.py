"""Super-graph structure description and packed parameter layout.

Layer 1 holds one component per candidate feature (input only). Layers 2 and
3 are parallel linear+ReLU blocks of differing widths; layer 4 is a single
linear head producing one Q-value per phase. Every edge (i in layer I) ->
(j in layer I+1) owns a dense weight+bias; all edge parameters live in one
flat float64 vector so the optimizer and soft updates are single-array ops.

Weights are stored transposed per edge, (fout, fin) row-major, which keeps
the hot kernel's inner loops contiguous; `edge_weight` returns the (fin,
fout) view callers expect.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_HIDDEN = (16, 18, 20, 22, 24)


@dataclass(frozen=True)
class SuperGraphSpec:
    input_dims: tuple[int, ...]                      # layer-1 component dims
    hidden2: tuple[int, ...] = DEFAULT_HIDDEN
    hidden3: tuple[int, ...] = DEFAULT_HIDDEN
    output_dim: int = 2
    feature_ids: tuple[str, ...] = ()                # optional names per input

    def __post_init__(self):
        if not self.input_dims or min(self.input_dims) <= 0:
            raise ValueError("input_dims must be positive")
        if min(self.hidden2) <= 0 or min(self.hidden3) <= 0 or self.output_dim <= 0:
            raise ValueError("all layer dims must be positive")
        if self.feature_ids and len(self.feature_ids) != len(self.input_dims):
            raise ValueError("feature_ids must match input_dims")

    @property
    def layer_sizes(self) -> tuple[int, int, int]:
        return (len(self.input_dims), len(self.hidden2), len(self.hidden3))


def count_subgraphs(spec: SuperGraphSpec) -> int:
    """Number of distinct single-path sub-graphs: the product of layer sizes."""
    n = 1
    for size in spec.layer_sizes:
        n *= size
    return n


@dataclass
class PackedLayout:
    """Offset tables into the flat parameter vector."""
    total: int
    aw: np.ndarray      # (L1, L2) weight offsets, stage 1->2
    ab: np.ndarray      # (L1, L2) bias offsets
    bw: np.ndarray      # (L2, L3)
    bb: np.ndarray
    cw: np.ndarray      # (L3,)
    cb: np.ndarray
    in_dims: np.ndarray
    in_off: np.ndarray  # column offsets into the packed feature matrix
    h2: np.ndarray
    h3: np.ndarray
    p: int
    alpha_sizes: tuple[int, int, int] = field(default=(0, 0, 0))


def build_layout(spec: SuperGraphSpec) -> PackedLayout:
    l1, l2, l3 = spec.layer_sizes
    in_dims = np.array(spec.input_dims, dtype=np.int64)
    h2 = np.array(spec.hidden2, dtype=np.int64)
    h3 = np.array(spec.hidden3, dtype=np.int64)
    p = spec.output_dim

    aw = np.zeros((l1, l2), dtype=np.int64)
    ab = np.zeros((l1, l2), dtype=np.int64)
    bw = np.zeros((l2, l3), dtype=np.int64)
    bb = np.zeros((l2, l3), dtype=np.int64)
    cw = np.zeros(l3, dtype=np.int64)
    cb = np.zeros(l3, dtype=np.int64)

    off = 0
    for i in range(l1):
        for j in range(l2):
            aw[i, j] = off
            off += int(in_dims[i] * h2[j])
            ab[i, j] = off
            off += int(h2[j])
    for i in range(l2):
        for j in range(l3):
            bw[i, j] = off
            off += int(h2[i] * h3[j])
            bb[i, j] = off
            off += int(h3[j])
    for i in range(l3):
        cw[i] = off
        off += int(h3[i] * p)
        cb[i] = off
        off += p

    in_off = np.zeros(l1, dtype=np.int64)
    acc = 0
    for i in range(l1):
        in_off[i] = acc
        acc += int(in_dims[i])

    return PackedLayout(total=off, aw=aw, ab=ab, bw=bw, bb=bb, cw=cw, cb=cb,
                        in_dims=in_dims, in_off=in_off, h2=h2, h3=h3, p=p,
                        alpha_sizes=(l1, l2, l3))


def init_theta(spec: SuperGraphSpec, layout: PackedLayout,
               rng: np.random.Generator) -> np.ndarray:
    """Uniform +-sqrt(6/(fin+fout)) weights, zero biases, in canonical edge order."""
    theta = np.zeros(layout.total)
    l1, l2, l3 = spec.layer_sizes

    def fill(w_off, fin, fout):
        bound = np.sqrt(6.0 / (fin + fout))
        theta[w_off:w_off + fin * fout] = rng.uniform(-bound, bound, size=fin * fout)

    for i in range(l1):
        for j in range(l2):
            fill(int(layout.aw[i, j]), int(layout.in_dims[i]), int(layout.h2[j]))
    for i in range(l2):
        for j in range(l3):
            fill(int(layout.bw[i, j]), int(layout.h2[i]), int(layout.h3[j]))
    for i in range(l3):
        fill(int(layout.cw[i]), int(layout.h3[i]), layout.p)
    return theta
