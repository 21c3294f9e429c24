"""Training drivers: super-graph search, sub-graph refinement, the random-path
ablation, and the density-threshold baseline. All loops are deterministic per
(scenario, hyperparams, seed)."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from ..sim.network import Scenario
from ..supergraph import FeatureAdapter, SubGraph, SuperGraph, random_path
from .dqn import (HyperParams, SubGraphTrainer, SuperGraphTrainer, dqn_act,
                  epsilon_schedule)
from .ecolight import EcoLightModel, EcoLightTrainer, observe_density
from .replay import ReplayBuffer, Transition
from .runner import make_sim

ALPHA_HEALTH_THRESHOLD = 0.05


@dataclass
class EpisodeRow:
    phase: str                 # "search" | "refine"
    episode: int
    epsilon: float
    mean_td_loss: float
    entropy_loss: float
    avg_travel_time: float
    throughput: float


@dataclass
class SearchResult:
    graphs: dict[str, SuperGraph]
    episodes: list[EpisodeRow] = field(default_factory=list)
    alpha_log: list[tuple[int, str, int, int, float]] = field(default_factory=list)
    # rows: (episode, intersection, layer, index, alpha)


class TinyLightTraining:
    """Owns the per-intersection super-graphs, buffers and optimizers."""

    def __init__(self, scenario: Scenario, hp: HyperParams, seed: int = 0):
        self.scenario = scenario
        self.hp = hp
        self.seed = seed
        template = make_sim(scenario)
        self.iids = [i.id for i in scenario.network.intersections]
        self.adapters = {iid: FeatureAdapter(template, iid, hp.normalize_features)
                         for iid in self.iids}
        self.graphs: dict[str, SuperGraph] = {}
        self.trainers: dict[str, SuperGraphTrainer] = {}
        self.buffers: dict[str, ReplayBuffer] = {}
        for k, iid in enumerate(self.iids):
            inter = scenario.network.intersection_by_id[iid]
            spec = self.adapters[iid].spec(inter.num_phases, hp.hidden2, hp.hidden3)
            sg = SuperGraph(spec, seed=seed * 1009 + k)
            self.graphs[iid] = sg
            self.trainers[iid] = SuperGraphTrainer(sg, hp)
            self.buffers[iid] = ReplayBuffer(hp.buffer_capacity)
        self.rng = np.random.default_rng(seed)

    def _episode(self, jitter_seed: int, eps: float, act_fn, train_fn):
        hp = self.hp
        sim = make_sim(self.scenario, jitter_seed)
        obs = {iid: self.adapters[iid].observe(sim) for iid in self.iids}
        td_sum, td_n, ent_last = 0.0, 0, 0.0
        while sim.t < hp.episode_s:
            actions = {iid: act_fn(iid, obs[iid], eps) for iid in self.iids}
            for iid in self.iids:
                sim.mark_decision(iid)
            for _ in range(hp.decision_interval_s):
                sim.step(actions)
            done = sim.t + hp.decision_interval_s > hp.episode_s
            for iid in self.iids:
                nxt = self.adapters[iid].observe(sim)
                r = sim.intersection_reward(iid) * hp.reward_scale
                self.buffers[iid].push(
                    Transition(obs[iid], actions[iid], r, nxt, done))
                obs[iid] = nxt
            losses = train_fn()
            if losses is not None:
                td, ent = losses
                td_sum += td
                td_n += 1
                ent_last = ent
        m = sim.metrics()
        return (td_sum / td_n if td_n else 0.0, ent_last,
                m["avg_travel_time"], m["throughput"])

    def run_search(self) -> SearchResult:
        hp = self.hp
        result = SearchResult(graphs=self.graphs)

        def act(iid, packed_obs, eps):
            q = self.trainers[iid].q_values(packed_obs)
            return dqn_act(q, eps, self.rng)

        def train():
            any_loss = None
            for iid in self.iids:
                if len(self.buffers[iid]) >= hp.batch_size:
                    batch = self.buffers[iid].sample(hp.batch_size, self.rng)
                    any_loss = self.trainers[iid].train_step(batch)
            return any_loss

        for ep in range(hp.search_episodes):
            eps = epsilon_schedule(ep, hp.search_episodes, hp.eps_start, hp.eps_end)
            td, ent, att, thr = self._episode(self.seed * 7919 + ep, eps, act, train)
            result.episodes.append(EpisodeRow("search", ep, eps, td, ent, att, thr))
            for iid in self.iids:
                for layer_idx, alpha in enumerate(self.graphs[iid].alphas(), start=1):
                    for k, val in enumerate(alpha):
                        result.alpha_log.append((ep, iid, layer_idx, k, float(val)))
        return result

    def extract_subgraphs(self, warn_unhealthy: bool = True) -> dict[str, SubGraph]:
        subs = {}
        for iid, sg in self.graphs.items():
            sub = sg.extract(keep=self.hp.keep)
            if warn_unhealthy:
                a1, a2, a3 = sg.alphas()
                spare = [a1[i] for i in range(a1.size) if i not in sub.feature_indices]
                spare += sorted(a2)[:-1] + sorted(a3)[:-1]
                worst = max((float(x) for x in spare), default=0.0)
                if worst >= ALPHA_HEALTH_THRESHOLD:
                    warnings.warn(
                        f"{iid}: non-retained edge weight {worst:.3f} >= "
                        f"{ALPHA_HEALTH_THRESHOLD}; search may not have converged")
            subs[iid] = sub
        return subs

    def run_refine(self, subs: dict[str, SubGraph],
                   episodes: int | None = None) -> list[EpisodeRow]:
        hp = self.hp
        episodes = hp.refine_episodes if episodes is None else episodes
        trainers = {iid: SubGraphTrainer(subs[iid], hp) for iid in self.iids}
        rows = []

        def act(iid, packed_obs, eps):
            xs = self.adapters[iid].select(packed_obs, subs[iid].feature_indices)
            q = trainers[iid].q_values(xs)
            return dqn_act(q, eps, self.rng)

        def train():
            last = None
            for iid in self.iids:
                if len(self.buffers[iid]) >= hp.batch_size:
                    batch = self.buffers[iid].sample(hp.batch_size, self.rng)
                    select = (lambda S, _iid=iid: self.adapters[_iid]
                              .select(S, subs[_iid].feature_indices))
                    last = trainers[iid].train_step(batch, select)
            return (last, 0.0) if last is not None else None

        for ep in range(episodes):
            td, _, att, thr = self._episode(self.seed * 104729 + ep, hp.eps_end, act, train)
            rows.append(EpisodeRow("refine", ep, hp.eps_end, td, 0.0, att, thr))
        return rows


def train_tinylight(scenario: Scenario, hp: HyperParams, seed: int = 0):
    """Full two-phase run: search, extract, refine. Returns (subs, training, rows)."""
    training = TinyLightTraining(scenario, hp, seed)
    search = training.run_search()
    subs = training.extract_subgraphs()
    refine_rows = training.run_refine(subs)
    return subs, training, search, refine_rows


def train_tlrp(scenario: Scenario, hp: HyperParams, seed: int = 0):
    """Random-path ablation: uniform sub-graph choice, trained with the same
    total episode budget the two-phase run gets."""
    training = TinyLightTraining(scenario, hp, seed)
    subs = {}
    for k, iid in enumerate(training.iids):
        sg = training.graphs[iid]
        subs[iid] = random_path(sg.spec, seed=seed * 31 + k, keep=hp.keep, sg=sg)
    rows = training.run_refine(subs, episodes=hp.search_episodes + hp.refine_episodes)
    return subs, training, rows


def train_ecolight(scenario: Scenario, hp: HyperParams, seed: int = 0):
    """Train the keep/switch density baseline with the shared TD machinery."""
    iids = [i.id for i in scenario.network.intersections]
    models = {iid: EcoLightModel(seed=seed * 17 + k) for k, iid in enumerate(iids)}
    trainers = {iid: EcoLightTrainer(models[iid], hp) for iid in iids}
    buffers = {iid: ReplayBuffer(hp.buffer_capacity) for iid in iids}
    rng = np.random.default_rng(seed)
    rows = []
    episodes = hp.search_episodes + hp.refine_episodes
    for ep in range(episodes):
        eps = epsilon_schedule(ep, episodes, hp.eps_start, hp.eps_end)
        sim = make_sim(scenario, seed * 7919 + ep)
        obs = {iid: observe_density(sim, iid) for iid in iids}
        td_sum, td_n = 0.0, 0
        while sim.t < hp.episode_s:
            actions, commands = {}, {}
            for iid in iids:
                q = models[iid].forward(obs[iid])
                a = dqn_act(q, eps, rng)
                actions[iid] = a
                cur = sim.signals[iid].current_phase
                inter = sim.intersection(iid)
                commands[iid] = (cur + 1) % inter.num_phases if a == 1 else cur
            for _ in range(hp.decision_interval_s):
                sim.step(commands)
            done = sim.t + hp.decision_interval_s > hp.episode_s
            for iid in iids:
                nxt = observe_density(sim, iid)
                r = sim.intersection_reward(iid) * hp.reward_scale
                buffers[iid].push(Transition(obs[iid], actions[iid], r, nxt, done))
                obs[iid] = nxt
                if len(buffers[iid]) >= hp.batch_size:
                    td_sum += trainers[iid].train_step(
                        buffers[iid].sample(hp.batch_size, rng))
                    td_n += 1
        m = sim.metrics()
        rows.append(EpisodeRow("search", ep, eps, td_sum / td_n if td_n else 0.0,
                               0.0, m["avg_travel_time"], m["throughput"]))
    return models, rows
