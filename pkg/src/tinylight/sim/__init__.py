from .network import (SERVICE_INTERVAL_S, SLOT_LENGTH_M, YELLOW_S, Flow,
                      Intersection, LaneLink, Phase, Road, RoadNetwork,
                      Scenario, ScenarioError, lane_id)
from .scenario import (SCHEMA_VERSION, jitter_flow, load_scenario,
                       scenario_from_dict, scenario_to_dict)
from .engine import DecisionSnapshot, SignalState, Simulation, Vehicle
from .presets import PRESETS, cross_scenario, get_preset, grid_2x1_scenario, jinan_like_scenario

__all__ = [
    "SERVICE_INTERVAL_S", "SLOT_LENGTH_M", "YELLOW_S", "SCHEMA_VERSION",
    "Flow", "Intersection", "LaneLink", "Phase", "Road", "RoadNetwork",
    "Scenario", "ScenarioError", "lane_id", "jitter_flow", "load_scenario",
    "scenario_from_dict", "scenario_to_dict", "DecisionSnapshot", "SignalState",
    "Simulation", "Vehicle", "PRESETS", "cross_scenario", "get_preset",
    "grid_2x1_scenario", "jinan_like_scenario",
]
