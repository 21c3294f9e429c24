"""Codegen options and the generated-file contract constants."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MARKER = "tinylight-codegen"
MARKER_VERSION = 1
VECTOR_MAGIC = "tlvec"

ROM_BUDGET_BYTES = 32_768
RAM_BUDGET_BYTES = 2_048


@dataclass
class CodegenOptions:
    precision: str = "float32"            # float32 | q15
    prefix: str = "tl"
    emit_argmax: bool = True
    test_vector_count: int = 1000
    calibration_states: list | None = None   # list of per-input float vectors
    input_ranges: list | None = None          # per-input (lo, hi) arrays

    def __post_init__(self):
        if self.precision not in ("float32", "q15"):
            raise ValueError(f"unsupported precision {self.precision!r}")
        if not self.prefix.isidentifier():
            raise ValueError(f"prefix {self.prefix!r} is not a valid C identifier")


def calibration_matrixes(sub, opts: CodegenOptions) -> list[np.ndarray]:
    """Stack calibration states into per-input matrices, if provided."""
    if not opts.calibration_states:
        return []
    mats = [[] for _ in sub.input_dims]
    for state in opts.calibration_states:
        for k, x in enumerate(state):
            mats[k].append(np.asarray(x, dtype=np.float64))
    return [np.stack(m) for m in mats]
