from .ops import argmax_tie_low, entropy, linear, relu, softmax, td_loss
from .optim import SGD, Adam, glorot_uniform, make_optimizer
from .tape import (Node, backward, gradients, leaf, t_add, t_entropy, t_linear,
                   t_relu, t_scale, t_softmax, t_square_sum, t_sum, t_td_loss)
from .checkpoint import load_checkpoint, save_checkpoint

__all__ = [
    "argmax_tie_low", "entropy", "linear", "relu", "softmax", "td_loss",
    "SGD", "Adam", "glorot_uniform", "make_optimizer",
    "Node", "backward", "gradients", "leaf", "t_add", "t_entropy", "t_linear",
    "t_relu", "t_scale", "t_softmax", "t_square_sum", "t_sum", "t_td_loss",
    "load_checkpoint", "save_checkpoint",
]
