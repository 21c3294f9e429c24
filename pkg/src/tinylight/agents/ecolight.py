"""A keep/switch threshold-learner baseline: a 2 -> 10 -> 10 -> 2 Q-network over
green/red incoming-lane densities, trained with the shared TD machinery."""

from __future__ import annotations

import numpy as np

from .. import nn
from ..sim.engine import Simulation
from .dqn import HyperParams, _batch_arrays, soft_update
from .replay import Transition

HIDDEN = (10, 10)
N_ACTIONS = 2          # 0 = keep current phase, 1 = switch to the next


class EcoLightModel:
    def __init__(self, seed: int = 0):
        rng = np.random.default_rng(seed)
        dims = (2,) + HIDDEN + (N_ACTIONS,)
        self.weights = [nn.glorot_uniform(rng, dims[k], dims[k + 1])
                        for k in range(len(dims) - 1)]
        self.biases = [np.zeros(dims[k + 1]) for k in range(len(dims) - 1)]

    def params(self) -> list[np.ndarray]:
        out = []
        for w, b in zip(self.weights, self.biases):
            out.extend((w, b))
        return out

    def num_params(self) -> int:
        return sum(p.size for p in self.params())

    def forward(self, x: np.ndarray) -> np.ndarray:
        h = nn.relu(nn.linear(x, self.weights[0], self.biases[0]))
        h = nn.relu(nn.linear(h, self.weights[1], self.biases[1]))
        return nn.linear(h, self.weights[2], self.biases[2])


def observe_density(sim: Simulation, iid: str) -> np.ndarray:
    """[mean density of green incoming lanes, mean density of red ones]."""
    inter = sim.intersection(iid)
    phase = inter.phases[sim.signals[iid].current_phase]
    green = {sim.net.lane_links[li].in_lane for li in phase.passable_links}

    def density(lanes):
        if not lanes:
            return 0.0
        vals = [sim.lane_count(l) / sim.net.road_of_lane(l).capacity_per_lane
                for l in lanes]
        return float(np.mean(vals))

    red = [l for l in inter.in_lanes if l not in green]
    return np.array([density(sorted(green)), density(red)])


class EcoLightTrainer:
    def __init__(self, model: EcoLightModel, hp: HyperParams):
        self.model = model
        self.hp = hp
        self.target = EcoLightModel()
        self.target.weights = [w.copy() for w in model.weights]
        self.target.biases = [b.copy() for b in model.biases]
        self.opt = nn.make_optimizer(hp.optimizer, model.params(), lr=hp.lr)

    def train_step(self, batch: list[Transition]) -> float:
        if not batch:
            raise ValueError("empty batch")
        states, actions, rewards, next_states, dones = _batch_arrays(batch)
        q_next = self.target.forward(next_states)
        m = self.model
        nodes = [nn.leaf(p) for p in m.params()]
        h = nn.t_relu(nn.t_linear(nn.Node(states), nodes[0], nodes[1]))
        h = nn.t_relu(nn.t_linear(h, nodes[2], nodes[3]))
        q = nn.t_linear(h, nodes[4], nodes[5])
        loss = nn.t_td_loss(q, actions, rewards, q_next, dones, gamma=self.hp.gamma)
        nn.backward(loss)
        grads = [nd.grad if nd.grad is not None else np.zeros_like(nd.data)
                 for nd in nodes]
        self.opt.step(m.params(), grads)
        soft_update(self.target.params(), m.params(), self.hp.tau)
        return float(loss.data)


class EcoLightPolicy:
    """Greedy keep/switch policy over the trained model."""

    def __init__(self, models: dict[str, EcoLightModel]):
        self.models = models

    def act(self, sim: Simulation) -> dict[str, int]:
        out = {}
        for inter in sim.net.intersections:
            q = self.models[inter.id].forward(observe_density(sim, inter.id))
            cur = sim.signals[inter.id].current_phase
            out[inter.id] = (cur + 1) % inter.num_phases if nn.argmax_tie_low(q) == 1 else cur
        return out
