"""Rule-based controllers: fixed-time cycling, max-pressure, and SOTL."""

from __future__ import annotations

from dataclasses import dataclass

from ..sim.engine import Simulation


def act_fixed_time(t: int, cycle_s: int, num_phases: int) -> int:
    """Pure function of the clock: phase = floor(t / cycle) mod P."""
    if cycle_s <= 0:
        raise ValueError("cycle_s must be positive")
    return (t // cycle_s) % num_phases


def act_max_pressure(sim: Simulation, iid: str) -> int:
    """Phase whose passable links carry the largest total pressure
    (incoming minus outgoing); ties go to the lowest phase id."""
    inter = sim.intersection(iid)
    best_phase, best_pressure = 0, None
    for phase in inter.phases:
        pressure = sum(sim.movement_pressure(sim.net.lane_links[li])
                       for li in phase.passable_links)
        if best_pressure is None or pressure > best_pressure:
            best_phase, best_pressure = phase.id, pressure
    return best_phase


def _green_in_lanes(sim: Simulation, iid: str) -> list[str]:
    inter = sim.intersection(iid)
    phase = inter.phases[sim.signals[iid].current_phase]
    seen, lanes = set(), []
    for li in phase.passable_links:
        lane = sim.net.lane_links[li].in_lane
        if lane not in seen:
            seen.add(lane)
            lanes.append(lane)
    return lanes


def act_sotl(sim: Simulation, iid: str, theta_green: float = 4.0,
             theta_red: float = 6.0, min_green_s: int = 10) -> str:
    """'advance' to the next phase in cyclic order when waiting demand on red
    incoming lanes exceeds theta_red, green lanes hold fewer than theta_green
    vehicles, and the minimum green time has elapsed; else 'keep'.
    Both threshold comparisons are strict."""
    if theta_green < 0 or theta_red < 0:
        raise ValueError("thresholds must be non-negative")
    inter = sim.intersection(iid)
    sig = sim.signals[iid]
    green = _green_in_lanes(sim, iid)
    red = [l for l in inter.in_lanes if l not in green]
    red_waiting = sum(sim.lane_waiting_count(l) for l in red)
    green_count = sum(sim.lane_count(l) for l in green)
    elapsed = sim.t - sig.last_change_t
    if red_waiting > theta_red and green_count < theta_green and elapsed >= min_green_s:
        return "advance"
    return "keep"


@dataclass
class FixedTimePolicy:
    cycle_s: int = 30

    def act(self, sim: Simulation) -> dict[str, int]:
        return {i.id: act_fixed_time(sim.t, self.cycle_s, i.num_phases)
                for i in sim.net.intersections}


@dataclass
class MaxPressurePolicy:
    def act(self, sim: Simulation) -> dict[str, int]:
        return {i.id: act_max_pressure(sim, i.id) for i in sim.net.intersections}


@dataclass
class SOTLPolicy:
    theta_green: float = 4.0
    theta_red: float = 6.0
    min_green_s: int = 10

    def act(self, sim: Simulation) -> dict[str, int]:
        out = {}
        for inter in sim.net.intersections:
            decision = act_sotl(sim, inter.id, self.theta_green, self.theta_red,
                                self.min_green_s)
            cur = sim.signals[inter.id].current_phase
            out[inter.id] = (cur + 1) % inter.num_phases if decision == "advance" else cur
        return out
