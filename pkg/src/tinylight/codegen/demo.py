"""The reference demo sub-graph: inputs (12, 10) -> 18 -> 20 -> 9, the
published sample whose footprint is exactly 1,001 weights / 4,004 bytes."""

from __future__ import annotations

from ..supergraph import SuperGraph, SuperGraphSpec, extract


def sample_subgraph(seed: int = 0):
    spec = SuperGraphSpec(input_dims=(12, 10), hidden2=(18,), hidden3=(20,),
                          output_dim=9)
    return extract(SuperGraph(spec, seed=seed), keep=(2, 1, 1))
