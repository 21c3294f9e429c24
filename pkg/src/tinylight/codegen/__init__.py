from .options import (RAM_BUDGET_BYTES, ROM_BUDGET_BYTES, CodegenOptions,
                      MARKER, VECTOR_MAGIC)
from .emit import (activation_buffer_bytes, emit_c, fmt_f32, parse_marker,
                   static_data_bytes)
from .quantize import QuantizedSubGraph, quantize_q15, quantize_tensor, tensor_scale
from .reference import reference_forward
from .vectors import TestVectorSet, emit_test_vectors, read_vectors, write_vectors
from .demo import sample_subgraph

__all__ = [
    "RAM_BUDGET_BYTES", "ROM_BUDGET_BYTES", "CodegenOptions", "MARKER",
    "VECTOR_MAGIC", "activation_buffer_bytes", "emit_c", "fmt_f32",
    "parse_marker", "static_data_bytes", "QuantizedSubGraph", "quantize_q15",
    "quantize_tensor", "tensor_scale", "reference_forward", "TestVectorSet",
    "emit_test_vectors", "read_vectors", "write_vectors", "sample_subgraph",
]
