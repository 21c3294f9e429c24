"""Kernel backend selection: numba when available, numpy otherwise.

Set TINYLIGHT_BACKEND=numpy|numba|auto (default auto) before import or call
`set_backend` explicitly. With auto, numba is used if it imports.
"""

from __future__ import annotations

import os

from . import kernels as _numpy_kernels

try:
    from . import kernels_numba as _numba_kernels
    HAS_NUMBA = True
except ImportError:
    _numba_kernels = None
    HAS_NUMBA = False

_ACTIVE = None
_ACTIVE_NAME = ""


def set_backend(name: str) -> None:
    global _ACTIVE, _ACTIVE_NAME
    if name == "auto":
        name = "numba" if HAS_NUMBA else "numpy"
    if name == "numba":
        if not HAS_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        _ACTIVE = _numba_kernels
    elif name == "numpy":
        _ACTIVE = _numpy_kernels
    else:
        raise ValueError(f"unknown backend {name!r} (use auto|numba|numpy)")
    _ACTIVE_NAME = name


def get_kernels():
    if _ACTIVE is None:
        set_backend(os.environ.get("TINYLIGHT_BACKEND", "auto"))
    return _ACTIVE


def backend_name() -> str:
    get_kernels()
    return _ACTIVE_NAME
