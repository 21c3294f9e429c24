from .spec import DEFAULT_HIDDEN, PackedLayout, SuperGraphSpec, build_layout, count_subgraphs
from .graph import (SubGraph, SuperGraph, combined_loss, extract,
                    extract_with_indices, random_path, top_k_by_alpha)
from .adapters import FeatureAdapter
from .backend import HAS_NUMBA, backend_name, get_kernels, set_backend

__all__ = [
    "DEFAULT_HIDDEN", "PackedLayout", "SuperGraphSpec", "build_layout",
    "count_subgraphs", "SubGraph", "SuperGraph", "combined_loss", "extract",
    "extract_with_indices", "random_path", "top_k_by_alpha", "FeatureAdapter",
    "HAS_NUMBA", "backend_name", "get_kernels", "set_backend",
]
