"""Value-based training: hyperparameters, epsilon-greedy acting, the dual
theta/alpha update for super-graphs, and plain TD training for sub-graphs."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import nn
from ..supergraph import SubGraph, SuperGraph
from ..supergraph.backend import get_kernels
from .replay import ReplayBuffer, Transition


@dataclass
class HyperParams:
    buffer_capacity: int = 100_000
    batch_size: int = 32
    gamma: float = 0.9
    eps_start: float = 0.1
    eps_end: float = 0.0
    tau: float = 0.1
    lr: float = 1e-3
    beta: float = 16.0
    search_episodes: int = 30
    refine_episodes: int = 10
    episode_s: int = 600
    decision_interval_s: int = 10
    reward_scale: float = 0.05
    optimizer: str = "adam"
    normalize_features: bool = True
    hidden2: tuple[int, ...] = (16, 18, 20, 22, 24)
    hidden3: tuple[int, ...] = (16, 18, 20, 22, 24)
    keep: tuple[int, int, int] = (2, 1, 1)

    def __post_init__(self):
        if self.buffer_capacity < self.batch_size:
            raise ValueError("buffer capacity must be >= batch size")
        if not 0.0 < self.gamma <= 1.0:
            raise ValueError("gamma must be in (0, 1]")
        if not 0.0 < self.tau <= 1.0:
            raise ValueError("tau must be in (0, 1]")
        if not 0.0 <= self.eps_start <= 0.1 or not 0.0 <= self.eps_end <= 0.1:
            raise ValueError("epsilon must stay within [0, 0.1]")

    @classmethod
    def from_dict(cls, doc: dict) -> "HyperParams":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(doc) - known
        if unknown:
            raise ValueError(f"unknown hyperparameter keys: {sorted(unknown)}")
        doc = dict(doc)
        for key in ("hidden2", "hidden3", "keep"):
            if key in doc:
                doc[key] = tuple(doc[key])
        return cls(**doc)


def epsilon_schedule(episode: int, total_episodes: int, eps_start: float = 0.1,
                     eps_end: float = 0.0) -> float:
    """Linear decay reaching eps_end on the final episode; non-increasing."""
    if total_episodes <= 1:
        return eps_end
    frac = min(1.0, episode / (total_episodes - 1))
    return eps_start + (eps_end - eps_start) * frac


def dqn_act(q: np.ndarray, eps: float, rng: np.random.Generator) -> int:
    """Epsilon-greedy: uniform random phase with prob eps, else argmax (ties low)."""
    if not 0.0 <= eps <= 1.0:
        raise ValueError("eps must be in [0, 1]")
    if eps > 0.0 and rng.random() < eps:
        return int(rng.integers(q.shape[-1]))
    return nn.argmax_tie_low(q)


def soft_update(target: list[np.ndarray], online: list[np.ndarray], tau: float = 0.1) -> None:
    """target <- (1 - tau) * target + tau * online for every parameter array."""
    for t, o in zip(target, online):
        if t.shape != o.shape:
            raise ValueError(f"shape mismatch {t.shape} vs {o.shape}")
        t *= 1.0 - tau
        t += tau * o


def _batch_arrays(batch: list[Transition]):
    states = np.stack([tr.state for tr in batch])
    next_states = np.stack([tr.next_state for tr in batch])
    actions = np.array([tr.action for tr in batch], dtype=np.int64)
    rewards = np.array([tr.reward for tr in batch], dtype=np.float64)
    dones = np.array([1.0 if tr.done else 0.0 for tr in batch], dtype=np.float64)
    return states, actions, rewards, next_states, dones


def _softmax_vjp(alpha: np.ndarray, d_alpha: np.ndarray) -> np.ndarray:
    return alpha * (d_alpha - float(np.dot(alpha, d_alpha)))


class SuperGraphTrainer:
    """Dual gradient descent on one super-graph: a theta step minimizing the
    batch TD loss with alpha frozen, then an alpha step minimizing TD loss
    plus beta times the summed entropy with theta frozen."""

    def __init__(self, sg: SuperGraph, hp: HyperParams):
        self.sg = sg
        self.hp = hp
        self.target = sg.clone()
        self.opt_theta = nn.make_optimizer(hp.optimizer, [sg.theta], lr=hp.lr)
        self.opt_alpha = nn.make_optimizer(hp.optimizer, sg.alpha_logits, lr=hp.lr)

    def q_values(self, packed_state: np.ndarray) -> np.ndarray:
        return self.sg.forward(packed_state)

    def _td_pass(self, states, actions, rewards, next_states, dones):
        kern = get_kernels()
        sg = self.sg
        a_t = self.target.alphas()
        q_next = kern.forward(next_states, self.target.theta, self.target.layout, *a_t)
        targets = rewards + self.hp.gamma * q_next.max(axis=1) * (1.0 - dones)
        a_on = sg.alphas()
        q, caches = kern.forward_cached(states, sg.theta, sg.layout, *a_on)
        n = states.shape[0]
        rows = np.arange(n)
        err = q[rows, actions] - targets
        d_q = np.zeros_like(q)
        d_q[rows, actions] = 2.0 * err / n
        grads = kern.backward(states, sg.theta, sg.layout, *a_on, caches, d_q)
        return float((err ** 2).mean()), grads

    def train_step(self, batch: list[Transition]) -> tuple[float, float]:
        if not batch:
            raise ValueError("empty batch")
        arrays = _batch_arrays(batch)

        td_loss, grads = self._td_pass(*arrays)
        self.opt_theta.step([self.sg.theta], [grads[0]])

        ent_loss = self.sg.entropy_loss()
        _, grads2 = self._td_pass(*arrays)
        alphas = self.sg.alphas()
        ent_g = self.sg.entropy_grad_logits()
        logit_grads = [
            _softmax_vjp(a, da) + self.hp.beta * ge
            for a, da, ge in zip(alphas, grads2[1:], ent_g)
        ]
        self.opt_alpha.step(self.sg.alpha_logits, logit_grads)

        self.target.soft_update_from(self.sg, self.hp.tau)
        return td_loss, ent_loss


class SubGraphTrainer:
    """Plain TD training of an extracted sub-graph's theta (refinement phase)."""

    def __init__(self, sub: SubGraph, hp: HyperParams):
        self.sub = sub
        self.hp = hp
        self.params = list(sub.param_arrays().values())
        self.target_params = [p.copy() for p in self.params]
        self.opt = nn.make_optimizer(hp.optimizer, self.params, lr=hp.lr)

    def _target_forward(self, inputs: list[np.ndarray]) -> np.ndarray:
        n_in = len(self.sub.input_dims)
        t = self.target_params
        h = None
        for k, x in enumerate(inputs):
            part = nn.relu(nn.linear(x, t[2 * k], t[2 * k + 1]))
            h = part if h is None else h + part
        h2 = nn.relu(nn.linear(h, t[2 * n_in], t[2 * n_in + 1]))
        return nn.linear(h2, t[2 * n_in + 2], t[2 * n_in + 3])

    def q_values(self, inputs: list[np.ndarray]) -> np.ndarray:
        return self.sub.forward(inputs)

    def train_step(self, batch: list[Transition],
                   select) -> float:
        """`select` slices a packed observation into the sub-graph's inputs."""
        if not batch:
            raise ValueError("empty batch")
        states, actions, rewards, next_states, dones = _batch_arrays(batch)
        q_next = self._target_forward(select(next_states))
        sub = self.sub
        nodes = {name: nn.leaf(arr) for name, arr in sub.param_arrays().items()}
        h = None
        for k, x in enumerate(select(states)):
            part = nn.t_relu(nn.t_linear(nn.Node(x), nodes[f"w_in_{k}"],
                                         nodes[f"b_in_{k}"]))
            h = part if h is None else nn.t_add(h, part)
        h2 = nn.t_relu(nn.t_linear(h, nodes["w_mid"], nodes["b_mid"]))
        q = nn.t_linear(h2, nodes["w_out"], nodes["b_out"])
        loss = nn.t_td_loss(q, actions, rewards, q_next, dones, gamma=self.hp.gamma)
        nn.backward(loss)
        order = list(sub.param_arrays().keys())
        grads = [nodes[name].grad if nodes[name].grad is not None
                 else np.zeros_like(nodes[name].data) for name in order]
        self.opt.step(self.params, grads)
        soft_update(self.target_params, self.params, self.hp.tau)
        return float(loss.data)


def make_buffer(hp: HyperParams) -> ReplayBuffer:
    return ReplayBuffer(hp.buffer_capacity)
