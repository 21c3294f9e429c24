"""Built-in synthetic scenarios used by tests, configs and the CLI (`preset:<name>`)."""

from __future__ import annotations

from .network import Scenario, lane_id
from .scenario import scenario_from_dict

_APPROACHES = ("N", "E", "S", "W")
# target out-road per (approach, movement); movements are 0=left, 1=through, 2=right
_TURN_TARGET = {
    "N": ("E", "S", "W"),
    "E": ("S", "W", "N"),
    "S": ("W", "N", "E"),
    "W": ("N", "E", "S"),
}


def cross_scenario(duration_s: int = 3600, ns_interval: int = 4, ew_interval: int = 12,
                   road_length_m: float = 300.0, speed_mps: float = 10.0) -> Scenario:
    """Single 4-way intersection, one lane per approach, two through phases.

    Demand is asymmetric: north-south spawns every ``ns_interval`` seconds per
    approach, east-west every ``ew_interval``. Lower intervals mean congestion.
    """
    roads = []
    for a in _APPROACHES:
        roads.append({"id": f"{a}_in", "from": f"{a}_ext", "to": "I0",
                      "length_m": road_length_m, "max_speed_mps": speed_mps, "lanes": 1})
        roads.append({"id": f"{a}_out", "from": "I0", "to": f"{a}_sink",
                      "length_m": road_length_m, "max_speed_mps": speed_mps, "lanes": 1})
    # through links only: N->S, S->N, E->W, W->E
    links = [{"in": lane_id("N_in", 0), "out": lane_id("S_out", 0)},
             {"in": lane_id("S_in", 0), "out": lane_id("N_out", 0)},
             {"in": lane_id("E_in", 0), "out": lane_id("W_out", 0)},
             {"in": lane_id("W_in", 0), "out": lane_id("E_out", 0)}]
    doc = {
        "version": 1,
        "roads": roads,
        "lane_links": links,
        "intersections": [{"id": "I0", "phases": [[0, 1], [2, 3]]}],
        "conflicts": [[0, 2], [0, 3], [1, 2], [1, 3]],
        "flows": [
            {"route": ["N_in", "S_out"], "start": 0, "end": duration_s, "interval": ns_interval},
            {"route": ["S_in", "N_out"], "start": 0, "end": duration_s, "interval": ns_interval},
            {"route": ["E_in", "W_out"], "start": 0, "end": duration_s, "interval": ew_interval},
            {"route": ["W_in", "E_out"], "start": 0, "end": duration_s, "interval": ew_interval},
        ],
    }
    return scenario_from_dict(doc, where="preset:cross")


def _movement_links(approach: str, movement: int) -> list[int]:
    """Link indices of one movement: 4 approaches x 3 movements x 3 target lanes."""
    a = _APPROACHES.index(approach)
    return [a * 9 + movement * 3 + ol for ol in range(3)]


def jinan_like_scenario(duration_s: int = 600, through_interval: int = 6,
                        turn_interval: int = 15) -> Scenario:
    """Four-way intersection with 12 in / 12 out lanes, 36 lane links and 9 phases.

    Matches the lane/link/phase counts of the reference intersection used by
    the resource ledger (L_in=12, L_out=12, P=9, L_link=36).
    """
    roads = []
    for a in _APPROACHES:
        roads.append({"id": f"{a}_in", "from": f"{a}_ext", "to": "I0",
                      "length_m": 300.0, "max_speed_mps": 10.0, "lanes": 3})
        roads.append({"id": f"{a}_out", "from": "I0", "to": f"{a}_sink",
                      "length_m": 300.0, "max_speed_mps": 10.0, "lanes": 3})

    links = []
    for a in _APPROACHES:
        for m in range(3):                       # 0=left, 1=through, 2=right
            target = _TURN_TARGET[a][m]
            for ol in range(3):
                links.append({"in": lane_id(f"{a}_in", m),
                              "out": lane_id(f"{target}_out", ol)})

    mv = {f"{a}{'LTR'[m]}": _movement_links(a, m) for a in _APPROACHES for m in range(3)}
    phases = [
        mv["NT"] + mv["ST"],
        mv["ET"] + mv["WT"],
        mv["NL"] + mv["SL"],
        mv["EL"] + mv["WL"],
        mv["NT"] + mv["NL"],
        mv["ST"] + mv["SL"],
        mv["ET"] + mv["EL"],
        mv["WT"] + mv["WL"],
        mv["NR"] + mv["ER"] + mv["SR"] + mv["WR"],
    ]

    conflict_movements = [
        ("NT", "ET"), ("NT", "WT"), ("ST", "ET"), ("ST", "WT"),
        ("NL", "ST"), ("SL", "NT"), ("EL", "WT"), ("WL", "ET"),
        ("NL", "ET"), ("NL", "WT"), ("SL", "ET"), ("SL", "WT"),
        ("EL", "NT"), ("EL", "ST"), ("WL", "NT"), ("WL", "ST"),
        ("NL", "EL"), ("NL", "WL"), ("SL", "EL"), ("SL", "WL"),
    ]
    conflicts = [[x, y] for m1, m2 in conflict_movements for x in mv[m1] for y in mv[m2]]

    flows = []
    for a in _APPROACHES:
        flows.append({"route": [f"{a}_in", f"{_TURN_TARGET[a][1]}_out"],
                      "start": 0, "end": duration_s, "interval": through_interval})
        flows.append({"route": [f"{a}_in", f"{_TURN_TARGET[a][0]}_out"],
                      "start": 3, "end": duration_s, "interval": turn_interval})

    doc = {"version": 1, "roads": roads, "lane_links": links,
           "intersections": [{"id": "I0", "phases": phases}],
           "conflicts": conflicts, "flows": flows}
    return scenario_from_dict(doc, where="preset:jinan_like")


def grid_2x1_scenario(duration_s: int = 600, main_interval: int = 6,
                      cross_interval: int = 15) -> Scenario:
    """Two intersections in a row with a west-east arterial route crossing both."""
    roads = [
        {"id": "W_in", "from": "W_ext", "to": "I0",
         "length_m": 300.0, "max_speed_mps": 10.0, "lanes": 1},
        {"id": "mid", "from": "I0", "to": "I1",
         "length_m": 200.0, "max_speed_mps": 10.0, "lanes": 1},
        {"id": "E_out", "from": "I1", "to": "E_sink",
         "length_m": 300.0, "max_speed_mps": 10.0, "lanes": 1},
    ]
    for node in ("I0", "I1"):
        roads.append({"id": f"N_in_{node}", "from": f"N_ext_{node}", "to": node,
                      "length_m": 300.0, "max_speed_mps": 10.0, "lanes": 1})
        roads.append({"id": f"S_out_{node}", "from": node, "to": f"S_sink_{node}",
                      "length_m": 300.0, "max_speed_mps": 10.0, "lanes": 1})
    links = [
        {"in": lane_id("W_in", 0), "out": lane_id("mid", 0)},        # 0: I0 west->east
        {"in": lane_id("N_in_I0", 0), "out": lane_id("S_out_I0", 0)},  # 1: I0 north->south
        {"in": lane_id("mid", 0), "out": lane_id("E_out", 0)},       # 2: I1 west->east
        {"in": lane_id("N_in_I1", 0), "out": lane_id("S_out_I1", 0)},  # 3: I1 north->south
    ]
    doc = {
        "version": 1,
        "roads": roads,
        "lane_links": links,
        "intersections": [{"id": "I0", "phases": [[0], [1]]},
                          {"id": "I1", "phases": [[2], [3]]}],
        "conflicts": [[0, 1], [2, 3]],
        "flows": [
            {"route": ["W_in", "mid", "E_out"],
             "start": 0, "end": duration_s, "interval": main_interval},
            {"route": ["N_in_I0", "S_out_I0"],
             "start": 2, "end": duration_s, "interval": cross_interval},
            {"route": ["N_in_I1", "S_out_I1"],
             "start": 4, "end": duration_s, "interval": cross_interval},
        ],
    }
    return scenario_from_dict(doc, where="preset:grid_2x1")


PRESETS = {
    "cross": cross_scenario,
    "jinan_like": jinan_like_scenario,
    "grid_2x1": grid_2x1_scenario,
}


def get_preset(name: str, **kwargs) -> Scenario:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; choices: {sorted(PRESETS)}")
    return PRESETS[name](**kwargs)
