from .replay import ReplayBuffer, Transition
from .dqn import (HyperParams, SubGraphTrainer, SuperGraphTrainer, dqn_act,
                  epsilon_schedule, soft_update)
from .baselines import (FixedTimePolicy, MaxPressurePolicy, SOTLPolicy,
                        act_fixed_time, act_max_pressure, act_sotl)
from .ecolight import EcoLightModel, EcoLightPolicy, EcoLightTrainer, observe_density
from .runner import SubGraphPolicy, evaluate_policy, make_sim, metrics_csv_header
from .training import (EpisodeRow, SearchResult, TinyLightTraining,
                       train_ecolight, train_tinylight, train_tlrp)

__all__ = [
    "ReplayBuffer", "Transition", "HyperParams", "SubGraphTrainer",
    "SuperGraphTrainer", "dqn_act", "epsilon_schedule", "soft_update",
    "FixedTimePolicy", "MaxPressurePolicy", "SOTLPolicy", "act_fixed_time",
    "act_max_pressure", "act_sotl", "EcoLightModel", "EcoLightPolicy",
    "EcoLightTrainer", "observe_density", "SubGraphPolicy", "evaluate_policy",
    "make_sim", "metrics_csv_header", "EpisodeRow", "SearchResult",
    "TinyLightTraining", "train_ecolight", "train_tinylight", "train_tlrp",
]
