"""Static road-network model: roads, lanes, lane links, phases, intersections.

Lanes are identified as ``"<road_id>#<index>"``. A lane link is a directed
(incoming lane, outgoing lane) pair attached to the intersection where the
incoming road ends. Phases are per-intersection sets of passable lane links.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

SLOT_LENGTH_M = 7.5          # space one queued vehicle occupies
SERVICE_INTERVAL_S = 2       # one vehicle per green lane link every 2 s
YELLOW_S = 3                 # fixed yellow time between phases


class ScenarioError(ValueError):
    """Raised when a scenario file or network violates an invariant."""


def lane_id(road_id: str, index: int) -> str:
    return f"{road_id}#{index}"


@dataclass(frozen=True)
class Road:
    id: str
    from_node: str
    to_node: str
    length_m: float
    max_speed_mps: float
    num_lanes: int

    @property
    def lane_ids(self) -> list[str]:
        return [lane_id(self.id, k) for k in range(self.num_lanes)]

    @property
    def capacity_per_lane(self) -> int:
        return max(1, math.ceil(self.length_m / SLOT_LENGTH_M))

    @property
    def travel_time_s(self) -> int:
        return max(1, round(self.length_m / self.max_speed_mps))


@dataclass(frozen=True)
class LaneLink:
    index: int
    in_lane: str
    out_lane: str


@dataclass(frozen=True)
class Phase:
    id: int
    passable_links: tuple[int, ...]   # lane-link indices


@dataclass
class Intersection:
    id: str
    phases: list[Phase]
    in_roads: list[str] = field(default_factory=list)
    out_roads: list[str] = field(default_factory=list)
    in_lanes: list[str] = field(default_factory=list)
    out_lanes: list[str] = field(default_factory=list)
    link_indices: list[int] = field(default_factory=list)

    @property
    def num_phases(self) -> int:
        return len(self.phases)


@dataclass(frozen=True)
class Flow:
    route: tuple[str, ...]            # ordered road ids
    spawn_times: tuple[int, ...]      # seconds, sorted


@dataclass
class RoadNetwork:
    roads: list[Road]
    lane_links: list[LaneLink]
    intersections: list[Intersection]
    conflicts: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.road_by_id = {r.id: r for r in self.roads}
        self.lane_road: dict[str, Road] = {}
        for road in self.roads:
            for lid in road.lane_ids:
                self.lane_road[lid] = road
        self.intersection_by_id = {i.id: i for i in self.intersections}

    def road_of_lane(self, lane: str) -> Road:
        return self.lane_road[lane]


@dataclass
class Scenario:
    network: RoadNetwork
    flows: list[Flow]


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ScenarioError(msg)


def validate_network(net: RoadNetwork) -> None:
    """Check every structural invariant, raising ScenarioError naming the violation."""
    _check(len({r.id for r in net.roads}) == len(net.roads), "duplicate road id")
    for road in net.roads:
        _check(road.num_lanes >= 1, f"road {road.id}: num_lanes must be >= 1")
        _check(road.length_m > 0, f"road {road.id}: length_m must be positive")
        _check(road.max_speed_mps > 0, f"road {road.id}: max_speed_mps must be positive")

    for link in net.lane_links:
        _check(link.in_lane in net.lane_road,
               f"lane link {link.index}: unknown incoming lane {link.in_lane!r}")
        _check(link.out_lane in net.lane_road,
               f"lane link {link.index}: unknown outgoing lane {link.out_lane!r}")

    conflict_set = {frozenset(p) for p in net.conflicts}
    for inter in net.intersections:
        _check(inter.num_phases >= 2,
               f"intersection {inter.id}: needs at least 2 phases, got {inter.num_phases}")
        for phase in inter.phases:
            for li in phase.passable_links:
                _check(0 <= li < len(net.lane_links),
                       f"intersection {inter.id} phase {phase.id}: bad link index {li}")
                _check(li in set(inter.link_indices),
                       f"intersection {inter.id} phase {phase.id}: link {li} "
                       "does not belong to this intersection")
            for a in phase.passable_links:
                for b in phase.passable_links:
                    if a < b:
                        _check(frozenset((a, b)) not in conflict_set,
                               f"intersection {inter.id} phase {phase.id}: "
                               f"links {a} and {b} conflict")
        # every incoming lane belongs to exactly one incoming road of this intersection
        for lane in inter.in_lanes:
            road = net.road_of_lane(lane)
            _check(road.id in inter.in_roads,
                   f"intersection {inter.id}: lane {lane} not on an incoming road")
            _check(road.to_node == inter.id,
                   f"intersection {inter.id}: incoming road {road.id} does not end here")


def build_intersections(roads: list[Road], lane_links: list[LaneLink],
                        phase_table: dict[str, list[list[int]]]) -> list[Intersection]:
    """Derive per-intersection road/lane/link membership from network topology.

    An intersection exists for every key of ``phase_table``; its incoming roads
    are the roads ending at that node, outgoing roads those starting there.
    """
    road_by_id = {r.id: r for r in roads}
    lane_road = {}
    for road in roads:
        for lid in road.lane_ids:
            lane_road[lid] = road.id

    intersections = []
    for node, phases in phase_table.items():
        in_roads = [r.id for r in roads if r.to_node == node]
        out_roads = [r.id for r in roads if r.from_node == node]
        in_lanes = [lid for rid in in_roads for lid in road_by_id[rid].lane_ids]
        out_lanes = [lid for rid in out_roads for lid in road_by_id[rid].lane_ids]
        link_idx = [lk.index for lk in lane_links
                    if lane_road.get(lk.in_lane) in in_roads]
        intersections.append(Intersection(
            id=node,
            phases=[Phase(id=k, passable_links=tuple(p)) for k, p in enumerate(phases)],
            in_roads=in_roads,
            out_roads=out_roads,
            in_lanes=in_lanes,
            out_lanes=out_lanes,
            link_indices=link_idx,
        ))
    return intersections


def validate_routes(scenario: Scenario) -> None:
    """Routes must reference known roads and be connected end to end."""
    net = scenario.network
    for fi, flow in enumerate(scenario.flows):
        _check(len(flow.route) >= 1, f"flow {fi}: empty route")
        for rid in flow.route:
            _check(rid in net.road_by_id, f"flow {fi}: unknown road {rid!r}")
        for a, b in zip(flow.route, flow.route[1:]):
            ra, rb = net.road_by_id[a], net.road_by_id[b]
            _check(ra.to_node == rb.from_node,
                   f"flow {fi}: roads {a} -> {b} are not connected")
            node = ra.to_node
            _check(node in net.intersection_by_id,
                   f"flow {fi}: roads {a} -> {b} meet at {node!r} which is not "
                   "a signalized intersection")
            has_link = any(
                net.road_of_lane(lk.in_lane).id == a and net.road_of_lane(lk.out_lane).id == b
                for lk in net.lane_links)
            _check(has_link, f"flow {fi}: no lane link connects {a} to {b}")
