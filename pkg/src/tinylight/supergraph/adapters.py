"""Input adapters: raw catalog features -> normalized packed network inputs.

Extraction stays literal; normalization lives here and is toggleable. Counts,
pressures and image cells divide by the intersection's largest lane capacity,
times and delays divide by 300 s, indicators pass through.
"""

from __future__ import annotations

import numpy as np

from .. import features as feats
from ..sim.engine import Simulation
from .spec import SuperGraphSpec

TIME_SCALE_S = 300.0


class FeatureAdapter:
    def __init__(self, sim: Simulation, iid: str, normalize: bool = True):
        self.iid = iid
        self.normalize = normalize
        inter = sim.intersection(iid)
        self.dims = feats.feature_dims(sim, iid)
        cap = max(sim.net.road_of_lane(l).capacity_per_lane
                  for l in inter.in_lanes + inter.out_lanes)
        divisors = []
        for spec, dim in feats.catalog(sim, iid):
            if not normalize or spec.kind == "indicator":
                d = 1.0
            elif spec.kind in ("count", "pressure", "image"):
                d = float(cap)
            else:  # time, delay
                d = TIME_SCALE_S
            divisors.append(np.full(dim, d))
        self.divisor = np.concatenate(divisors)
        self.total_dim = int(self.divisor.size)

    def spec(self, output_dim: int, hidden2=None, hidden3=None) -> SuperGraphSpec:
        kwargs = {}
        if hidden2 is not None:
            kwargs["hidden2"] = tuple(hidden2)
        if hidden3 is not None:
            kwargs["hidden3"] = tuple(hidden3)
        return SuperGraphSpec(
            input_dims=tuple(self.dims),
            output_dim=output_dim,
            feature_ids=tuple(s.fid for s in feats.CATALOG),
            **kwargs)

    def observe(self, sim: Simulation) -> np.ndarray:
        """Packed, normalized state vector for one intersection."""
        raw = np.concatenate([fv.values for fv in feats.extract_all(sim, self.iid)])
        return raw / self.divisor

    def select(self, packed: np.ndarray, feature_indices: list[int]) -> list[np.ndarray]:
        """Slice a packed observation back into chosen per-feature vectors."""
        offs = np.concatenate([[0], np.cumsum(self.dims)])
        return [packed[..., offs[k]:offs[k + 1]] for k in feature_indices]
