"""Atomic parameter/FLOP cost formulas for the structures the ledger covers.

FLOPs count individual floating-point operations (add, mul, div, comparison,
exponentiation). A linear layer costs (2*fin+1)*fout; ReLU costs 2 per
feature (compare + assign), so a fused relu(Linear(...)) row is
(2*fin+3)*fout. Conv2d here is always 1x1-kernel. Everything is integer
arithmetic; no floats anywhere in the ledger.
"""

from __future__ import annotations


def _positive(*dims: int) -> None:
    if any(d <= 0 for d in dims):
        raise ValueError(f"dimensions must be positive, got {dims}")


def linear_params(fin: int, fout: int) -> int:
    _positive(fin, fout)
    return (fin + 1) * fout


def linear_flops(fin: int, fout: int) -> int:
    _positive(fin, fout)
    return (2 * fin + 1) * fout


def conv2d_params(cin: int, cout: int) -> int:
    _positive(cin, cout)
    return (cin + 1) * cout


def conv2d_flops(cin: int, cout: int, hin: int, win: int) -> int:
    _positive(cin, cout, hin, win)
    return (2 * cin + 1) * cout * hin * win


def relu_flops(f: int) -> int:
    _positive(f)
    return 2 * f


def matmul_flops(x: int, y: int, z: int) -> int:
    """Cost of Mat[x,y] @ Mat[y,z]: y multiplies + y adds per output element."""
    _positive(x, y, z)
    return 2 * y * x * z


def softmax_flops(f: int) -> int:
    _positive(f)
    return 3 * f


def fused_relu_linear_flops(fin: int, fout: int) -> int:
    return linear_flops(fin, fout) + relu_flops(fout)


def fused_relu_conv2d_flops(cin: int, cout: int, hin: int, win: int) -> int:
    return conv2d_flops(cin, cout, hin, win) + relu_flops(cout * hin * win)
