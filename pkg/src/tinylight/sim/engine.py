"""Deterministic 1 Hz point-queue simulator of signalized road networks.

Model summary: each lane is a FIFO with capacity ceil(length / 7.5 m).
Entering a lane costs its free-flow time (length / max speed), after which the
vehicle queues at the stop line. A green lane link discharges at most one
queue-head vehicle every 2 s, and only if the downstream lane has space.
Phase changes always pass through exactly 3 s of yellow, during which the
intersection serves nothing. No randomness anywhere: identical (scenario,
command sequence) pairs give identical trajectories.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .network import (SERVICE_INTERVAL_S, YELLOW_S, Intersection, LaneLink,
                      Scenario)

UNSET = -1


@dataclass
class Vehicle:
    id: int
    route: tuple[str, ...]
    spawn_time: int
    road_idx: int = 0
    lane: str | None = None
    remaining_s: int = 0          # free-flow seconds left while in transit
    queued: bool = False
    waiting_since: int = UNSET
    depart_time: int = UNSET      # actual network-entry time
    arrive_time: int = UNSET
    finished: bool = False

    def next_road(self) -> str | None:
        nxt = self.road_idx + 1
        return self.route[nxt] if nxt < len(self.route) else None


@dataclass
class LaneState:
    transit: list[Vehicle] = field(default_factory=list)
    queue: deque[Vehicle] = field(default_factory=deque)

    @property
    def occupancy(self) -> int:
        return len(self.transit) + len(self.queue)


@dataclass
class SignalState:
    current_phase: int = 0
    pending_phase: int | None = None
    yellow_remaining: int = 0
    last_change_t: int = 0
    phase_changed_last_step: bool = False


@dataclass
class DecisionSnapshot:
    """State captured at the previous agent decision, for interval-delta features."""
    t: int = 0
    phase: int = 0
    vehicle_ids: frozenset[int] = frozenset()
    vehicle_count: int = 0


class Simulation:
    """Mutable simulator state plus the read API used by feature extraction."""

    def __init__(self, scenario: Scenario):
        self.scenario = scenario
        self.net = scenario.network
        self.t = 0
        self.lanes: dict[str, LaneState] = {lid: LaneState() for lid in self.net.lane_road}
        self.signals: dict[str, SignalState] = {
            i.id: SignalState() for i in self.net.intersections}
        self.last_cross: dict[int, int] = {lk.index: -10**9 for lk in self.net.lane_links}
        self.finished_count = 0
        self.sum_travel_time = 0

        self.vehicles: list[Vehicle] = []
        self.source_queues: dict[str, deque[Vehicle]] = {}
        spawn_order = []
        for fi, flow in enumerate(scenario.flows):
            for k, st in enumerate(flow.spawn_times):
                spawn_order.append((st, fi, k, flow.route))
        spawn_order.sort(key=lambda e: (e[0], e[1], e[2]))
        for vid, (st, _, _, route) in enumerate(spawn_order):
            veh = Vehicle(id=vid, route=route, spawn_time=st)
            self.vehicles.append(veh)
            self.source_queues.setdefault(route[0], deque()).append(veh)

        # lane-link lookup tables in stable order
        self.links_from_lane: dict[str, list[LaneLink]] = {}
        for lk in self.net.lane_links:
            self.links_from_lane.setdefault(lk.in_lane, []).append(lk)

        self.snapshots: dict[str, DecisionSnapshot] = {}
        for inter in self.net.intersections:
            self.snapshots[inter.id] = DecisionSnapshot(
                t=0, phase=0, vehicle_ids=frozenset(), vehicle_count=0)

    # ------------------------------------------------------------------ step

    def step(self, commands: dict[str, int] | None = None) -> None:
        """Advance one second. ``commands`` maps intersection id -> phase id."""
        commands = commands or {}
        t_new = self.t + 1

        for inter in self.net.intersections:
            sig = self.signals[inter.id]
            sig.phase_changed_last_step = False
            cmd = commands.get(inter.id)
            if cmd is None:
                continue
            if not 0 <= cmd < inter.num_phases:
                raise ValueError(f"intersection {inter.id}: invalid phase id {cmd}")
            if sig.yellow_remaining == 0 and cmd != sig.current_phase:
                sig.pending_phase = cmd
                sig.yellow_remaining = YELLOW_S

        self._advance_transit(t_new)
        self._serve_links(t_new)
        self._spawn(t_new)

        for inter in self.net.intersections:
            sig = self.signals[inter.id]
            if sig.yellow_remaining > 0:
                sig.yellow_remaining -= 1
                if sig.yellow_remaining == 0:
                    sig.current_phase = sig.pending_phase
                    sig.pending_phase = None
                    sig.last_change_t = t_new
                    sig.phase_changed_last_step = True

        self.t = t_new

    def _advance_transit(self, t_new: int) -> None:
        for lid in self.net.lane_road:
            lane = self.lanes[lid]
            if not lane.transit:
                continue
            still = []
            for veh in lane.transit:
                veh.remaining_s -= 1
                if veh.remaining_s > 0:
                    still.append(veh)
                elif veh.next_road() is None:
                    veh.finished = True
                    veh.arrive_time = t_new
                    veh.lane = None
                    self.finished_count += 1
                    self.sum_travel_time += t_new - veh.spawn_time
                else:
                    veh.queued = True
                    veh.waiting_since = t_new
                    lane.queue.append(veh)
            lane.transit = still

    def _serve_links(self, t_new: int) -> None:
        for inter in self.net.intersections:
            sig = self.signals[inter.id]
            if sig.yellow_remaining > 0:
                continue
            phase = inter.phases[sig.current_phase]
            for li in phase.passable_links:
                if t_new - self.last_cross[li] < SERVICE_INTERVAL_S:
                    continue
                link = self.net.lane_links[li]
                lane = self.lanes[link.in_lane]
                if not lane.queue:
                    continue
                head = lane.queue[0]
                if self.net.road_of_lane(link.out_lane).id != head.next_road():
                    continue
                dst_road = self.net.road_of_lane(link.out_lane)
                dst = self.lanes[link.out_lane]
                if dst.occupancy >= dst_road.capacity_per_lane:
                    continue
                lane.queue.popleft()
                head.road_idx += 1
                head.lane = link.out_lane
                head.queued = False
                head.waiting_since = UNSET
                head.remaining_s = dst_road.travel_time_s
                dst.transit.append(head)
                self.last_cross[li] = t_new

    def _spawn(self, t_new: int) -> None:
        for road_id in sorted(self.source_queues):
            pending = self.source_queues[road_id]
            road = self.net.road_by_id[road_id]
            entered_lanes: set[str] = set()
            while pending and pending[0].spawn_time <= t_new:
                veh = pending[0]
                nxt = veh.route[1] if len(veh.route) > 1 else None
                candidates = [lid for lid in road.lane_ids
                              if nxt is None
                              or any(self.net.road_of_lane(lk.out_lane).id == nxt
                                     for lk in self.links_from_lane.get(lid, []))]
                candidates = [lid for lid in candidates
                              if lid not in entered_lanes
                              and self.lanes[lid].occupancy < road.capacity_per_lane]
                if not candidates:
                    break
                best = min(candidates, key=lambda lid: (self.lanes[lid].occupancy, lid))
                pending.popleft()
                veh.lane = best
                veh.depart_time = t_new
                veh.remaining_s = road.travel_time_s
                self.lanes[best].transit.append(veh)
                entered_lanes.add(best)

    # ------------------------------------------------------------- accessors

    def intersection(self, iid: str) -> Intersection:
        return self.net.intersection_by_id[iid]

    def lane_vehicles(self, lane: str) -> list[Vehicle]:
        ls = self.lanes[lane]
        return list(ls.transit) + list(ls.queue)

    def lane_count(self, lane: str) -> int:
        return self.lanes[lane].occupancy

    def lane_waiting_count(self, lane: str) -> int:
        return len(self.lanes[lane].queue)

    def is_waiting(self, veh: Vehicle) -> bool:
        return veh.queued

    def wait_time(self, veh: Vehicle) -> int:
        return self.t - veh.waiting_since if veh.queued else 0

    def travel_time_so_far(self, veh: Vehicle) -> int:
        end = veh.arrive_time if veh.finished else self.t
        return end - veh.spawn_time

    def lane_delay(self, lane: str) -> float:
        """Estimated delay versus free flow: queued vehicles times service interval."""
        return float(len(self.lanes[lane].queue) * SERVICE_INTERVAL_S)

    def position_frac(self, veh: Vehicle) -> float:
        """Fraction of the lane already covered, in [0, 1); 1-side is the stop line."""
        if veh.lane is None:
            return 0.0
        road = self.net.road_of_lane(veh.lane)
        ls = self.lanes[veh.lane]
        slot = 1.0 / road.capacity_per_lane
        if veh.queued:
            k = list(ls.queue).index(veh)
            return max(0.0, 1.0 - (k + 0.5) * slot)
        frac = 1.0 - veh.remaining_s / road.travel_time_s
        cap_front = 1.0 - len(ls.queue) * slot
        return min(max(frac, 0.0), max(cap_front - 0.5 * slot, 0.0))

    def vehicles_on_intersection(self, iid: str) -> list[Vehicle]:
        inter = self.intersection(iid)
        out = []
        for lid in inter.in_lanes + inter.out_lanes:
            out.extend(self.lane_vehicles(lid))
        return out

    def link_vehicles(self, link: LaneLink) -> list[Vehicle]:
        """Vehicles attributed to a lane link: those on its incoming lane headed to
        the link's outgoing road, attributed to the first such link only."""
        first = None
        out_road = self.net.road_of_lane(link.out_lane).id
        for lk in self.links_from_lane.get(link.in_lane, []):
            if self.net.road_of_lane(lk.out_lane).id == out_road:
                first = lk
                break
        if first is None or first.index != link.index:
            return []
        return [v for v in self.lane_vehicles(link.in_lane) if v.next_road() == out_road]

    def movement_pressure(self, link: LaneLink) -> int:
        """Vehicles on the incoming lane minus vehicles on the outgoing lane."""
        return self.lane_count(link.in_lane) - self.lane_count(link.out_lane)

    def intersection_reward(self, iid: str) -> float:
        inter = self.intersection(iid)
        total = sum(self.movement_pressure(self.net.lane_links[li])
                    for li in inter.link_indices)
        return -abs(total)

    def entered_count(self) -> int:
        return sum(1 for v in self.vehicles if v.depart_time != UNSET)

    def on_network_count(self) -> int:
        return sum(ls.occupancy for ls in self.lanes.values())

    def source_waiting_count(self) -> int:
        return sum(len(q) for q in self.source_queues.values())

    def metrics(self) -> dict[str, float]:
        avg_tt = (self.sum_travel_time / self.finished_count
                  if self.finished_count else math.nan)
        throughput = self.finished_count / (self.t / 60.0) if self.t > 0 else 0.0
        return {"avg_travel_time": avg_tt, "throughput": throughput,
                "finished": float(self.finished_count)}

    # ------------------------------------------------- decision bookkeeping

    def mark_decision(self, iid: str) -> None:
        """Snapshot interval state for one intersection; call at each agent decision."""
        vehs = self.vehicles_on_intersection(iid)
        self.snapshots[iid] = DecisionSnapshot(
            t=self.t,
            phase=self.signals[iid].current_phase,
            vehicle_ids=frozenset(v.id for v in vehs),
            vehicle_count=len(vehs),
        )

    def snapshot(self, iid: str) -> DecisionSnapshot:
        return self.snapshots[iid]
