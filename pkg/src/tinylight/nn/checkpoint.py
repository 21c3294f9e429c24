"""Versioned JSON checkpoints: named arrays with shapes, row-major data, metadata."""

from __future__ import annotations

import json

import numpy as np

FORMAT = "tinylight-checkpoint"
VERSION = 1


def save_checkpoint(path: str, kind: str, arrays: dict[str, np.ndarray],
                    meta: dict | None = None, optimizer: dict | None = None) -> None:
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "kind": kind,
        "meta": meta or {},
        "arrays": {
            name: {"shape": list(a.shape), "data": np.asarray(a, dtype=np.float64)
                   .reshape(-1).tolist()}
            for name, a in arrays.items()
        },
    }
    if optimizer is not None:
        doc["optimizer"] = optimizer
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)


def load_checkpoint(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("format") != FORMAT:
        raise ValueError(f"{path}: not a {FORMAT} file")
    if doc.get("version") != VERSION:
        raise ValueError(f"{path}: unsupported checkpoint version {doc.get('version')!r}")
    doc["arrays"] = {
        name: np.array(spec["data"], dtype=np.float64).reshape(spec["shape"])
        for name, spec in doc["arrays"].items()
    }
    return doc
