"""Scenario JSON loading, validation and flow jitter.

File schema (version 1)::

    {
      "version": 1,
      "roads": [{"id", "from", "to", "length_m", "max_speed_mps", "lanes"}, ...],
      "lane_links": [{"in": "<lane id>", "out": "<lane id>"}, ...],
      "intersections": [{"id": "<node>", "phases": [[link idx, ...], ...]}, ...],
      "conflicts": [[link idx, link idx], ...],
      "flows": [{"route": [road id, ...],
                 "times": [t, ...]                      # explicit spawn times, or
                 "start": t0, "end": t1, "interval": k  # t0, t0+k, ... <= t1
                }, ...]
    }

Lane ids are ``"<road id>#<index>"`` with indices starting at 0.
"""

from __future__ import annotations

import json

import numpy as np

from .network import (Flow, LaneLink, Road, RoadNetwork, Scenario, ScenarioError,
                      build_intersections, validate_network, validate_routes)

SCHEMA_VERSION = 1

_ROAD_KEYS = {"id", "from", "to", "length_m", "max_speed_mps", "lanes"}
_FLOW_KEYS = {"route", "times", "start", "end", "interval"}


def _spawn_times(spec: dict, where: str) -> tuple[int, ...]:
    if "times" in spec:
        times = [int(t) for t in spec["times"]]
        if any(t < 0 for t in times):
            raise ScenarioError(f"{where}: negative spawn time")
        return tuple(sorted(times))
    try:
        start, end, interval = int(spec["start"]), int(spec["end"]), int(spec["interval"])
    except KeyError as exc:
        raise ScenarioError(f"{where}: needs either 'times' or start/end/interval") from exc
    if interval <= 0:
        raise ScenarioError(f"{where}: interval must be positive")
    return tuple(range(start, end + 1, interval))


def scenario_from_dict(doc: dict, where: str = "<dict>") -> Scenario:
    if doc.get("version") != SCHEMA_VERSION:
        raise ScenarioError(f"{where}: unsupported schema version {doc.get('version')!r}")

    roads = []
    for k, spec in enumerate(doc.get("roads", [])):
        missing = _ROAD_KEYS - set(spec)
        if missing:
            raise ScenarioError(f"{where}: road #{k} missing fields {sorted(missing)}")
        roads.append(Road(id=str(spec["id"]), from_node=str(spec["from"]),
                          to_node=str(spec["to"]), length_m=float(spec["length_m"]),
                          max_speed_mps=float(spec["max_speed_mps"]),
                          num_lanes=int(spec["lanes"])))

    links = [LaneLink(index=i, in_lane=str(s["in"]), out_lane=str(s["out"]))
             for i, s in enumerate(doc.get("lane_links", []))]

    phase_table = {str(s["id"]): [list(map(int, p)) for p in s["phases"]]
                   for s in doc.get("intersections", [])}
    intersections = build_intersections(roads, links, phase_table)

    conflicts = [(int(a), int(b)) for a, b in doc.get("conflicts", [])]
    net = RoadNetwork(roads=roads, lane_links=links,
                      intersections=intersections, conflicts=conflicts)
    validate_network(net)

    flows = []
    for k, spec in enumerate(doc.get("flows", [])):
        unknown = set(spec) - _FLOW_KEYS
        if unknown:
            raise ScenarioError(f"{where}: flow #{k} has unknown fields {sorted(unknown)}")
        flows.append(Flow(route=tuple(str(r) for r in spec["route"]),
                          spawn_times=_spawn_times(spec, f"{where}: flow #{k}")))

    scenario = Scenario(network=net, flows=flows)
    validate_routes(scenario)
    return scenario


def load_scenario(path: str) -> Scenario:
    """Load and validate a scenario file; raises ScenarioError with the violation."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return scenario_from_dict(doc, where=path)


def jitter_flow(flows: list[Flow], seed: int, bound_s: int = 60) -> list[Flow]:
    """Shift every spawn time by a uniform integer in [-bound_s, +bound_s], clamped at 0.

    Deterministic for a given seed; bound_s=0 returns an identical copy.
    """
    if bound_s < 0:
        raise ValueError("bound_s must be >= 0")
    rng = np.random.default_rng(seed)
    out = []
    for flow in flows:
        shifts = rng.integers(-bound_s, bound_s + 1, size=len(flow.spawn_times))
        times = tuple(sorted(max(0, t + int(d)) for t, d in zip(flow.spawn_times, shifts)))
        out.append(Flow(route=flow.route, spawn_times=times))
    return out


def scenario_to_dict(scenario: Scenario) -> dict:
    net = scenario.network
    return {
        "version": SCHEMA_VERSION,
        "roads": [{"id": r.id, "from": r.from_node, "to": r.to_node,
                   "length_m": r.length_m, "max_speed_mps": r.max_speed_mps,
                   "lanes": r.num_lanes} for r in net.roads],
        "lane_links": [{"in": lk.in_lane, "out": lk.out_lane} for lk in net.lane_links],
        "intersections": [{"id": i.id,
                           "phases": [list(p.passable_links) for p in i.phases]}
                          for i in net.intersections],
        "conflicts": [list(c) for c in net.conflicts],
        "flows": [{"route": list(f.route), "times": list(f.spawn_times)}
                  for f in scenario.flows],
    }
