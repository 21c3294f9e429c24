"""Super-graph parameters, forward, entropy objective and sub-graph extraction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import nn
from .backend import get_kernels
from .spec import SuperGraphSpec, build_layout, init_theta


class SuperGraph:
    """All edge parameters (flat theta) plus per-layer edge logits (alpha)."""

    def __init__(self, spec: SuperGraphSpec, seed: int = 0):
        self.spec = spec
        self.layout = build_layout(spec)
        rng = np.random.default_rng(seed)
        self.theta = init_theta(spec, self.layout, rng)
        l1, l2, l3 = spec.layer_sizes
        self.alpha_logits = [np.zeros(l1), np.zeros(l2), np.zeros(l3)]

    # ------------------------------------------------------------ parameters

    def alphas(self) -> list[np.ndarray]:
        return [nn.softmax(z) for z in self.alpha_logits]

    def edge_weight(self, stage: str, i: int, j: int = 0) -> np.ndarray:
        """(fin, fout) view into the flat vector; writes propagate."""
        lay = self.layout
        if stage == "a":
            fin, fout = int(lay.in_dims[i]), int(lay.h2[j])
            w0 = int(lay.aw[i, j])
        elif stage == "b":
            fin, fout = int(lay.h2[i]), int(lay.h3[j])
            w0 = int(lay.bw[i, j])
        elif stage == "c":
            fin, fout = int(lay.h3[i]), lay.p
            w0 = int(lay.cw[i])
        else:
            raise ValueError(stage)
        return self.theta[w0:w0 + fin * fout].reshape(fout, fin).T

    def edge_bias(self, stage: str, i: int, j: int = 0) -> np.ndarray:
        lay = self.layout
        if stage == "a":
            b0, fout = int(lay.ab[i, j]), int(lay.h2[j])
        elif stage == "b":
            b0, fout = int(lay.bb[i, j]), int(lay.h3[j])
        else:
            b0, fout = int(lay.cb[i]), lay.p
        return self.theta[b0:b0 + fout]

    def pack_inputs(self, inputs: list[np.ndarray]) -> np.ndarray:
        """Concatenate per-feature vectors (or batches) into the packed matrix."""
        dims = self.spec.input_dims
        if len(inputs) != len(dims):
            raise ValueError(f"expected {len(dims)} feature vectors, got {len(inputs)}")
        rows = []
        for k, (x, d) in enumerate(zip(inputs, dims)):
            x = np.asarray(x, dtype=np.float64)
            if x.shape[-1] != d:
                raise ValueError(f"feature {k}: dim {x.shape[-1]} != spec {d}")
            rows.append(x if x.ndim == 2 else x[None, :])
        return np.concatenate(rows, axis=1)

    # --------------------------------------------------------------- forward

    def forward(self, inputs: list[np.ndarray] | np.ndarray) -> np.ndarray:
        X = inputs if isinstance(inputs, np.ndarray) else self.pack_inputs(inputs)
        single = X.ndim == 1
        if single:
            X = X[None, :]
        a1, a2, a3 = self.alphas()
        q = get_kernels().forward(np.ascontiguousarray(X), self.theta, self.layout,
                                  a1, a2, a3)
        return q[0] if single else q

    # ------------------------------------------------------------ objectives

    def entropy_loss(self) -> float:
        return float(sum(nn.entropy(a) for a in self.alphas()))

    def entropy_grad_logits(self) -> list[np.ndarray]:
        """d(sum of per-layer entropies)/d(logits), per layer."""
        grads = []
        for a in self.alphas():
            h = nn.entropy(a)
            grads.append(-a * (np.log(np.clip(a, 1e-300, 1.0)) + h))
        return grads

    # ----------------------------------------------------------- target nets

    def clone(self) -> "SuperGraph":
        twin = SuperGraph.__new__(SuperGraph)
        twin.spec = self.spec
        twin.layout = self.layout
        twin.theta = self.theta.copy()
        twin.alpha_logits = [z.copy() for z in self.alpha_logits]
        return twin

    def soft_update_from(self, online: "SuperGraph", tau: float) -> None:
        self.theta *= 1.0 - tau
        self.theta += tau * online.theta
        for mine, theirs in zip(self.alpha_logits, online.alpha_logits):
            mine *= 1.0 - tau
            mine += tau * theirs

    # ------------------------------------------------------------ extraction

    def extract(self, keep=(2, 1, 1)) -> "SubGraph":
        return extract(self, keep)

    # ------------------------------------------------------------ checkpoint

    def save(self, path: str, optimizer: dict | None = None) -> None:
        arrays = {"theta": self.theta,
                  "alpha_logits_1": self.alpha_logits[0],
                  "alpha_logits_2": self.alpha_logits[1],
                  "alpha_logits_3": self.alpha_logits[2]}
        meta = {"input_dims": list(self.spec.input_dims),
                "hidden2": list(self.spec.hidden2),
                "hidden3": list(self.spec.hidden3),
                "output_dim": self.spec.output_dim,
                "feature_ids": list(self.spec.feature_ids)}
        nn.save_checkpoint(path, kind="supergraph", arrays=arrays, meta=meta,
                           optimizer=optimizer)

    @classmethod
    def load(cls, path: str) -> "SuperGraph":
        doc = nn.load_checkpoint(path)
        if doc["kind"] != "supergraph":
            raise ValueError(f"{path}: checkpoint kind {doc['kind']!r} is not supergraph")
        meta = doc["meta"]
        spec = SuperGraphSpec(input_dims=tuple(meta["input_dims"]),
                              hidden2=tuple(meta["hidden2"]),
                              hidden3=tuple(meta["hidden3"]),
                              output_dim=meta["output_dim"],
                              feature_ids=tuple(meta.get("feature_ids", ())))
        sg = cls(spec, seed=0)
        sg.theta[:] = doc["arrays"]["theta"]
        for k in range(3):
            sg.alpha_logits[k][:] = doc["arrays"][f"alpha_logits_{k + 1}"]
        return sg


def combined_loss(td: float, ent: float, beta: float = 16.0) -> float:
    """Value loss plus beta times the summed alpha entropy; beta must be >= 0."""
    if beta < 0:
        raise ValueError("beta must be non-negative")
    return float(td + beta * ent)


def top_k_by_alpha(alpha: np.ndarray, k: int) -> list[int]:
    """Indices of the k largest weights; ties break toward the lower index."""
    order = sorted(range(alpha.size), key=lambda i: (-alpha[i], i))
    return order[:k]


@dataclass
class SubGraph:
    """The deployed network: selected features -> hidden -> hidden -> phases.

    The retained layer-1 alphas are renormalized and folded into the copied
    edge weights, so inference is pure linear/ReLU/elementwise-sum."""
    feature_indices: list[int]
    feature_ids: list[str]
    input_dims: list[int]
    hidden2: int
    hidden3: int
    output_dim: int
    w_in: list[np.ndarray]
    b_in: list[np.ndarray]
    w_mid: np.ndarray
    b_mid: np.ndarray
    w_out: np.ndarray
    b_out: np.ndarray

    def forward(self, inputs: list[np.ndarray]) -> np.ndarray:
        if len(inputs) != len(self.input_dims):
            raise ValueError(f"expected {len(self.input_dims)} inputs")
        h = None
        for x, w, b in zip(inputs, self.w_in, self.b_in):
            part = nn.relu(nn.linear(np.asarray(x, dtype=np.float64), w, b))
            h = part if h is None else h + part
        h2 = nn.relu(nn.linear(h, self.w_mid, self.b_mid))
        return nn.linear(h2, self.w_out, self.b_out)

    def param_arrays(self) -> dict[str, np.ndarray]:
        arrays = {}
        for k, (w, b) in enumerate(zip(self.w_in, self.b_in)):
            arrays[f"w_in_{k}"] = w
            arrays[f"b_in_{k}"] = b
        arrays.update(w_mid=self.w_mid, b_mid=self.b_mid,
                      w_out=self.w_out, b_out=self.b_out)
        return arrays

    def num_params(self) -> int:
        return sum(a.size for a in self.param_arrays().values())

    def save(self, path: str, optimizer: dict | None = None) -> None:
        meta = {"feature_indices": self.feature_indices,
                "feature_ids": self.feature_ids,
                "input_dims": self.input_dims,
                "hidden2": self.hidden2, "hidden3": self.hidden3,
                "output_dim": self.output_dim}
        nn.save_checkpoint(path, kind="subgraph", arrays=self.param_arrays(),
                           meta=meta, optimizer=optimizer)

    @classmethod
    def load(cls, path: str) -> "SubGraph":
        doc = nn.load_checkpoint(path)
        if doc["kind"] != "subgraph":
            raise ValueError(f"{path}: checkpoint kind {doc['kind']!r} is not subgraph")
        meta, arrays = doc["meta"], doc["arrays"]
        n_in = len(meta["input_dims"])
        return cls(
            feature_indices=list(meta["feature_indices"]),
            feature_ids=list(meta["feature_ids"]),
            input_dims=list(meta["input_dims"]),
            hidden2=meta["hidden2"], hidden3=meta["hidden3"],
            output_dim=meta["output_dim"],
            w_in=[arrays[f"w_in_{k}"] for k in range(n_in)],
            b_in=[arrays[f"b_in_{k}"] for k in range(n_in)],
            w_mid=arrays["w_mid"], b_mid=arrays["b_mid"],
            w_out=arrays["w_out"], b_out=arrays["b_out"],
        )

    def manifest(self, blob_ref: str) -> dict:
        return {"feature_indices": self.feature_indices,
                "feature_ids": self.feature_ids,
                "input_dims": self.input_dims,
                "hidden_dims": [self.hidden2, self.hidden3],
                "output_dim": self.output_dim,
                "num_params": self.num_params(),
                "parameters": blob_ref}


def extract_with_indices(sg: SuperGraph, l1_idx: list[int], l2_idx: int,
                         l3_idx: int) -> SubGraph:
    """Build the sub-graph retaining the given components, folding renormalized
    layer-1 alphas into the copied weights."""
    a1 = sg.alphas()[0]
    kept = a1[l1_idx]
    total = float(kept.sum())
    weights = kept / total if total > 0 else np.full(len(l1_idx), 1.0 / len(l1_idx))

    spec = sg.spec
    ids = (list(spec.feature_ids) if spec.feature_ids
           else [f"in{k}" for k in range(len(spec.input_dims))])
    return SubGraph(
        feature_indices=list(l1_idx),
        feature_ids=[ids[k] for k in l1_idx],
        input_dims=[spec.input_dims[k] for k in l1_idx],
        hidden2=int(spec.hidden2[l2_idx]),
        hidden3=int(spec.hidden3[l3_idx]),
        output_dim=spec.output_dim,
        w_in=[sg.edge_weight("a", k, l2_idx).copy() * w
              for k, w in zip(l1_idx, weights)],
        b_in=[sg.edge_bias("a", k, l2_idx).copy() * w
              for k, w in zip(l1_idx, weights)],
        w_mid=sg.edge_weight("b", l2_idx, l3_idx).copy(),
        b_mid=sg.edge_bias("b", l2_idx, l3_idx).copy(),
        w_out=sg.edge_weight("c", l3_idx).copy(),
        b_out=sg.edge_bias("c", l3_idx).copy(),
    )


def extract(sg: SuperGraph, keep=(2, 1, 1)) -> SubGraph:
    """Retain the top-keep[I] components per layer by alpha (ties: lower index)."""
    l1, l2, l3 = sg.spec.layer_sizes
    for k, size in zip(keep, (l1, l2, l3)):
        if not 1 <= k <= size:
            raise ValueError(f"keep {keep} incompatible with layer sizes {(l1, l2, l3)}")
    if keep[1] != 1 or keep[2] != 1:
        raise ValueError("hidden layers retain exactly one component")
    a1, a2, a3 = sg.alphas()
    l1_idx = top_k_by_alpha(a1, keep[0])
    l2_idx = top_k_by_alpha(a2, 1)[0]
    l3_idx = top_k_by_alpha(a3, 1)[0]
    return extract_with_indices(sg, l1_idx, l2_idx, l3_idx)


def random_path(spec: SuperGraphSpec, seed: int, keep=(2, 1, 1),
                sg: SuperGraph | None = None) -> SubGraph:
    """Uniformly sample the retained components per layer (the random-path
    ablation); deterministic per seed. Weights come from `sg` when given,
    otherwise from a fresh seed-derived initialization."""
    rng = np.random.default_rng(seed)
    l1, l2, l3 = spec.layer_sizes
    l1_idx = sorted(int(i) for i in rng.choice(l1, size=keep[0], replace=False))
    l2_idx = int(rng.integers(l2))
    l3_idx = int(rng.integers(l3))
    if sg is None:
        sg = SuperGraph(spec, seed=seed)
    return extract_with_indices(sg, l1_idx, l2_idx, l3_idx)
