"""The 37-feature candidate catalog computed from a simulator view.

Each feature maps one network scale (lane / incoming lane / outgoing lane /
incoming road / phase / intersection / lane link) to a fixed-order numeric
vector. Formulas follow the published multi-scale catalog literally,
including its sign convention for pressure features (outgoing minus
incoming), which is the opposite of the control-side convention used by the
simulator's reward. No normalization happens here; the network input
adapters own that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .sim.engine import Simulation

SEGMENTS_K = 3          # lane segment count for the seg_by_k features
IMAGE_SIDE = 8          # occupancy image is IMAGE_SIDE x IMAGE_SIDE


@dataclass(frozen=True)
class FeatureSpec:
    fid: str
    name: str
    scale: str           # lane | inlane | outlane | inroad | phase | intersection | lanelink
    kind: str            # count | time | delay | pressure | image | indicator
    dim_of: Callable[["IntersectionInfo"], int]


@dataclass(frozen=True)
class IntersectionInfo:
    n_lanes: int
    n_in_lanes: int
    n_out_lanes: int
    n_in_roads: int
    n_phases: int
    n_links: int


def intersection_info(sim: Simulation, iid: str) -> IntersectionInfo:
    inter = sim.intersection(iid)
    return IntersectionInfo(
        n_lanes=len(inter.in_lanes) + len(inter.out_lanes),
        n_in_lanes=len(inter.in_lanes),
        n_out_lanes=len(inter.out_lanes),
        n_in_roads=len(inter.in_roads),
        n_phases=inter.num_phases,
        n_links=len(inter.link_indices),
    )


@dataclass
class FeatureVector:
    feature_id: str
    values: np.ndarray
    intersection: str
    t: int


def _lanes(sim, iid):
    inter = sim.intersection(iid)
    return inter.in_lanes + inter.out_lanes


def _counts(sim, lanes):
    return np.array([sim.lane_count(l) for l in lanes], dtype=np.float64)


def _waiting_counts(sim, lanes):
    return np.array([sim.lane_waiting_count(l) for l in lanes], dtype=np.float64)


def _sum_waits(sim, lanes):
    return np.array([sum(sim.wait_time(v) for v in sim.lane_vehicles(l))
                     for l in lanes], dtype=np.float64)


def _delays(sim, lanes):
    return np.array([sim.lane_delay(l) for l in lanes], dtype=np.float64)


def _seg_counts(sim, lanes):
    out = np.zeros(len(lanes) * SEGMENTS_K)
    for li, lane in enumerate(lanes):
        for veh in sim.lane_vehicles(lane):
            k = min(int(sim.position_frac(veh) * SEGMENTS_K), SEGMENTS_K - 1)
            out[li * SEGMENTS_K + k] += 1.0
    return out


def _links(sim, iid):
    inter = sim.intersection(iid)
    return [sim.net.lane_links[li] for li in inter.link_indices]


def _link_pressure_out_minus_in(sim, link) -> float:
    return float(sim.lane_count(link.out_lane) - sim.lane_count(link.in_lane))


def _phase_links(sim, iid, phase):
    return [sim.net.lane_links[li] for li in phase.passable_links]


def _phase_vehicles(sim, iid, phase):
    vehs = []
    for link in _phase_links(sim, iid, phase):
        vehs.extend(sim.link_vehicles(link))
    return vehs


def _f1(sim, iid):
    return _counts(sim, _lanes(sim, iid))


def _f2(sim, iid):
    return _waiting_counts(sim, _lanes(sim, iid))


def _f3(sim, iid):
    return _sum_waits(sim, _lanes(sim, iid))


def _f4(sim, iid):
    return _delays(sim, _lanes(sim, iid))


def _f5(sim, iid):
    return _seg_counts(sim, _lanes(sim, iid))


def _f6(sim, iid):
    return _counts(sim, sim.intersection(iid).in_lanes)


def _f7(sim, iid):
    return _waiting_counts(sim, sim.intersection(iid).in_lanes)


def _f8(sim, iid):
    return _sum_waits(sim, sim.intersection(iid).in_lanes)


def _f9(sim, iid):
    return _delays(sim, sim.intersection(iid).in_lanes)


def _f10(sim, iid):
    return _seg_counts(sim, sim.intersection(iid).in_lanes)


def _f11(sim, iid):
    inter = sim.intersection(iid)
    vals = []
    for lane in inter.in_lanes:
        links = [lk for lk in _links(sim, iid) if lk.in_lane == lane]
        vals.append(sum(_link_pressure_out_minus_in(sim, lk) for lk in links))
    return np.array(vals, dtype=np.float64)


def _f12(sim, iid):
    return _counts(sim, sim.intersection(iid).out_lanes)


def _f13(sim, iid):
    return _waiting_counts(sim, sim.intersection(iid).out_lanes)


def _f14(sim, iid):
    return _sum_waits(sim, sim.intersection(iid).out_lanes)


def _f15(sim, iid):
    return _delays(sim, sim.intersection(iid).out_lanes)


def _f16(sim, iid):
    return _seg_counts(sim, sim.intersection(iid).out_lanes)


def _inroad_lanes(sim, iid):
    inter = sim.intersection(iid)
    return [(rid, sim.net.road_by_id[rid].lane_ids) for rid in inter.in_roads]


def _f17(sim, iid):
    return np.array([sum(sim.lane_count(l) for l in lanes)
                     for _, lanes in _inroad_lanes(sim, iid)], dtype=np.float64)


def _f18(sim, iid):
    return np.array([sum(sim.lane_waiting_count(l) for l in lanes)
                     for _, lanes in _inroad_lanes(sim, iid)], dtype=np.float64)


def _f19(sim, iid):
    return np.array([sum(sim.wait_time(v) for l in lanes for v in sim.lane_vehicles(l))
                     for _, lanes in _inroad_lanes(sim, iid)], dtype=np.float64)


def _f20(sim, iid):
    return np.array([float(np.mean([sim.lane_delay(l) for l in lanes]))
                     for _, lanes in _inroad_lanes(sim, iid)], dtype=np.float64)


def _f21(sim, iid):
    inter = sim.intersection(iid)
    return np.array([sum(len(sim.link_vehicles(lk)) for lk in _phase_links(sim, iid, p))
                     for p in inter.phases], dtype=np.float64)


def _f22(sim, iid):
    inter = sim.intersection(iid)
    return np.array([sum(1 for v in _phase_vehicles(sim, iid, p) if sim.is_waiting(v))
                     for p in inter.phases], dtype=np.float64)


def _f23(sim, iid):
    inter = sim.intersection(iid)
    return np.array([sum(sim.wait_time(v) for v in _phase_vehicles(sim, iid, p))
                     for p in inter.phases], dtype=np.float64)


def _f24(sim, iid):
    inter = sim.intersection(iid)
    vals = []
    for p in inter.phases:
        seen, lanes = set(), []
        for lk in _phase_links(sim, iid, p):
            if lk.in_lane not in seen:
                seen.add(lk.in_lane)
                lanes.append(lk.in_lane)
        vals.append(float(np.mean([sim.lane_delay(l) for l in lanes])) if lanes else 0.0)
    return np.array(vals, dtype=np.float64)


def _f25(sim, iid):
    inter = sim.intersection(iid)
    return np.array([sum(_link_pressure_out_minus_in(sim, lk)
                         for lk in _phase_links(sim, iid, p))
                     for p in inter.phases], dtype=np.float64)


def _f26(sim, iid):
    return np.array([float(len(sim.vehicles_on_intersection(iid)))])


def _f27(sim, iid):
    return np.array([float(sum(1 for v in sim.vehicles_on_intersection(iid)
                               if sim.is_waiting(v)))])


def _f28(sim, iid):
    return np.array([float(sum(sim.wait_time(v)
                               for v in sim.vehicles_on_intersection(iid)))])


def _f29(sim, iid):
    lanes = _lanes(sim, iid)
    return np.array([float(np.mean([sim.lane_delay(l) for l in lanes]))])


def _f30(sim, iid):
    return np.array([sum(_link_pressure_out_minus_in(sim, lk)
                         for lk in _links(sim, iid))])


def _f31(sim, iid):
    lanes = _lanes(sim, iid)
    img = np.zeros((IMAGE_SIDE, IMAGE_SIDE))
    for li, lane in enumerate(lanes):
        row = li * IMAGE_SIDE // max(1, len(lanes))
        for veh in sim.lane_vehicles(lane):
            col = min(int(sim.position_frac(veh) * IMAGE_SIDE), IMAGE_SIDE - 1)
            img[row, col] += 1.0
    return img.reshape(-1)


def _f32(sim, iid):
    inter = sim.intersection(iid)
    out = np.zeros(inter.num_phases)
    out[sim.signals[iid].current_phase] = 1.0
    return out


def _f33(sim, iid):
    # literal formula: 1 when the phase at the previous decision equals the current one
    same = sim.snapshot(iid).phase == sim.signals[iid].current_phase
    return np.array([1.0 if same else 0.0])


def _f34(sim, iid):
    now = len(sim.vehicles_on_intersection(iid))
    return np.array([float(now - sim.snapshot(iid).vehicle_count)])


def _f35(sim, iid):
    now_ids = {v.id for v in sim.vehicles_on_intersection(iid)}
    gone = sim.snapshot(iid).vehicle_ids - now_ids
    return np.array([float(sum(sim.travel_time_so_far(sim.vehicles[vid])
                               for vid in sorted(gone)))])


def _f36(sim, iid):
    return np.array([_link_pressure_out_minus_in(sim, lk)
                     for lk in _links(sim, iid)], dtype=np.float64)


def _f37(sim, iid):
    return np.array([float(len(sim.link_vehicles(lk)))
                     for lk in _links(sim, iid)], dtype=np.float64)


_EXTRACTORS = {f"F{k}": fn for k, fn in enumerate(
    [_f1, _f2, _f3, _f4, _f5, _f6, _f7, _f8, _f9, _f10, _f11, _f12, _f13, _f14,
     _f15, _f16, _f17, _f18, _f19, _f20, _f21, _f22, _f23, _f24, _f25, _f26,
     _f27, _f28, _f29, _f30, _f31, _f32, _f33, _f34, _f35, _f36, _f37], start=1)}

_SPECS = [
    ("F1", "lane_2_num_vehicle", "lane", "count", lambda i: i.n_lanes),
    ("F2", "lane_2_num_waiting_vehicle", "lane", "count", lambda i: i.n_lanes),
    ("F3", "lane_2_sum_waiting_time", "lane", "time", lambda i: i.n_lanes),
    ("F4", "lane_2_delay", "lane", "delay", lambda i: i.n_lanes),
    ("F5", "lane_2_num_vehicle_seg_by_k", "lane", "count", lambda i: i.n_lanes * SEGMENTS_K),
    ("F6", "inlane_2_num_vehicle", "inlane", "count", lambda i: i.n_in_lanes),
    ("F7", "inlane_2_num_waiting_vehicle", "inlane", "count", lambda i: i.n_in_lanes),
    ("F8", "inlane_2_sum_waiting_time", "inlane", "time", lambda i: i.n_in_lanes),
    ("F9", "inlane_2_delay", "inlane", "delay", lambda i: i.n_in_lanes),
    ("F10", "inlane_2_num_vehicle_seg_by_k", "inlane", "count",
     lambda i: i.n_in_lanes * SEGMENTS_K),
    ("F11", "inlane_2_pressure", "inlane", "pressure", lambda i: i.n_in_lanes),
    ("F12", "outlane_2_num_vehicle", "outlane", "count", lambda i: i.n_out_lanes),
    ("F13", "outlane_2_num_waiting_vehicle", "outlane", "count", lambda i: i.n_out_lanes),
    ("F14", "outlane_2_sum_waiting_time", "outlane", "time", lambda i: i.n_out_lanes),
    ("F15", "outlane_2_delay", "outlane", "delay", lambda i: i.n_out_lanes),
    ("F16", "outlane_2_num_vehicle_seg_by_k", "outlane", "count",
     lambda i: i.n_out_lanes * SEGMENTS_K),
    ("F17", "inroad_2_num_vehicle", "inroad", "count", lambda i: i.n_in_roads),
    ("F18", "inroad_2_num_waiting_vehicle", "inroad", "count", lambda i: i.n_in_roads),
    ("F19", "inroad_2_sum_waiting_time", "inroad", "time", lambda i: i.n_in_roads),
    ("F20", "inroad_2_delay", "inroad", "delay", lambda i: i.n_in_roads),
    ("F21", "phase_2_num_vehicle", "phase", "count", lambda i: i.n_phases),
    ("F22", "phase_2_num_waiting_vehicle", "phase", "count", lambda i: i.n_phases),
    ("F23", "phase_2_sum_waiting_time", "phase", "time", lambda i: i.n_phases),
    ("F24", "phase_2_delay", "phase", "delay", lambda i: i.n_phases),
    ("F25", "phase_2_pressure", "phase", "pressure", lambda i: i.n_phases),
    ("F26", "inter_2_num_vehicle", "intersection", "count", lambda i: 1),
    ("F27", "inter_2_num_waiting_vehicle", "intersection", "count", lambda i: 1),
    ("F28", "inter_2_sum_waiting_time", "intersection", "time", lambda i: 1),
    ("F29", "inter_2_delay", "intersection", "delay", lambda i: 1),
    ("F30", "inter_2_pressure", "intersection", "pressure", lambda i: 1),
    ("F31", "inter_2_vehicle_position_image", "intersection", "image",
     lambda i: IMAGE_SIDE * IMAGE_SIDE),
    ("F32", "inter_2_current_phase", "intersection", "indicator", lambda i: i.n_phases),
    ("F33", "inter_2_phase_has_changed", "intersection", "indicator", lambda i: 1),
    ("F34", "inter_2_num_passed_vehicle_since_last_action", "intersection", "count",
     lambda i: 1),
    ("F35", "inter_2_sum_travel_time_since_last_action", "intersection", "time",
     lambda i: 1),
    ("F36", "lanelink_2_pressure", "lanelink", "pressure", lambda i: i.n_links),
    ("F37", "lanelink_2_num_vehicle", "lanelink", "count", lambda i: i.n_links),
]

CATALOG: list[FeatureSpec] = [FeatureSpec(*row) for row in _SPECS]
CATALOG_BY_ID = {spec.fid: spec for spec in CATALOG}

assert len(CATALOG) == 37


def catalog(sim: Simulation, iid: str) -> list[tuple[FeatureSpec, int]]:
    """The ordered catalog with concrete dimensions for one intersection."""
    info = intersection_info(sim, iid)
    return [(spec, spec.dim_of(info)) for spec in CATALOG]


def feature_dims(sim: Simulation, iid: str) -> list[int]:
    info = intersection_info(sim, iid)
    return [spec.dim_of(info) for spec in CATALOG]


def extract(feature_id: str, sim: Simulation, iid: str) -> FeatureVector:
    if feature_id not in _EXTRACTORS:
        raise KeyError(f"unknown feature id {feature_id!r}")
    values = np.asarray(_EXTRACTORS[feature_id](sim, iid), dtype=np.float64)
    info = intersection_info(sim, iid)
    want = CATALOG_BY_ID[feature_id].dim_of(info)
    if values.shape != (want,):
        raise AssertionError(
            f"{feature_id}: extractor produced shape {values.shape}, catalog says ({want},)")
    if not np.all(np.isfinite(values)):
        raise AssertionError(f"{feature_id}: non-finite value")
    return FeatureVector(feature_id=feature_id, values=values, intersection=iid, t=sim.t)


def extract_all(sim: Simulation, iid: str) -> list[FeatureVector]:
    return [extract(spec.fid, sim, iid) for spec in CATALOG]


def dump_features_csv(sim: Simulation, iid: str, fh) -> None:
    """Debug/fixture dump: one row per vector entry (t, intersection, id, index, value)."""
    fh.write("t,intersection,feature_id,index,value\n")
    for fv in extract_all(sim, iid):
        for idx, val in enumerate(fv.values):
            fh.write(f"{fv.t},{iid},{fv.feature_id},{idx},{val:.6f}\n")
