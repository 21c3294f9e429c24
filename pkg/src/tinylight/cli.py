"""Command-line orchestration: simulate | train | report | codegen | verify | compare.

Configs are schema-versioned JSON; unknown keys are rejected and validation
reports every violation at once. Every run writes its artifacts under the
chosen output directory together with a manifest recording the config hash
and seeds. Exit codes: 0 ok, 1 error, 2 acceptance-check failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import shutil
import subprocess
import sys

import numpy as np

from . import codegen as cg
from .agents import (EcoLightPolicy, FixedTimePolicy, HyperParams,
                     MaxPressurePolicy, SOTLPolicy, SubGraphPolicy,
                     evaluate_policy, make_sim, train_ecolight, train_tinylight,
                     train_tlrp)
from .resources import BUILTIN_MODELS, report, report_subgraph
from .sim import ScenarioError, get_preset, load_scenario
from .supergraph import FeatureAdapter, SubGraph
from .supergraph.backend import backend_name

CONFIG_SCHEMA = "tinylight-config/1"
RULE_AGENTS = ("fixed_time", "max_pressure", "sotl")
TRAINED_AGENTS = ("tinylight", "tlrp", "ecolight")
_CONFIG_KEYS = {"schema", "scenario", "scenario_args", "agent", "agents",
                "hyperparams", "seeds", "duration_s", "jitter"}
_AGENT_KEYS = {"kind", "cycle_s", "theta_green", "theta_red", "min_green_s",
               "dir", "label"}


class ConfigError(ValueError):
    pass


def load_config(path: str, need_agents: bool = False) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    problems = []
    if doc.get("schema") != CONFIG_SCHEMA:
        problems.append(f"schema must be {CONFIG_SCHEMA!r}, got {doc.get('schema')!r}")
    unknown = set(doc) - _CONFIG_KEYS
    if unknown:
        problems.append(f"unknown config keys: {sorted(unknown)}")
    if "scenario" not in doc:
        problems.append("missing 'scenario'")
    agents = doc.get("agents") if need_agents else (
        [doc["agent"]] if "agent" in doc else None)
    if agents is None:
        problems.append("missing 'agents'" if need_agents else "missing 'agent'")
    else:
        for k, spec in enumerate(agents):
            kind = spec.get("kind")
            if kind not in RULE_AGENTS + TRAINED_AGENTS + ("checkpoint",):
                problems.append(f"agent #{k}: unknown kind {kind!r}")
            bad = set(spec) - _AGENT_KEYS
            if bad:
                problems.append(f"agent #{k}: unknown keys {sorted(bad)}")
    seeds = doc.get("seeds", [0])
    if not seeds:
        problems.append("'seeds' must be non-empty")
    if "hyperparams" in doc:
        try:
            HyperParams.from_dict(doc["hyperparams"])
        except (ValueError, TypeError) as exc:
            problems.append(f"hyperparams: {exc}")
    if problems:
        raise ConfigError("invalid config:\n  - " + "\n  - ".join(problems))
    doc.setdefault("seeds", [0])
    doc.setdefault("duration_s", 3600)
    doc.setdefault("jitter", True)
    return doc


def resolve_scenario(ref: str, args: dict | None = None):
    if ref.startswith("preset:"):
        return get_preset(ref.split(":", 1)[1], **(args or {}))
    return load_scenario(ref)


def config_hash(doc: dict) -> str:
    blob = json.dumps(doc, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def write_manifest(out_dir: str, doc: dict, artifacts: list[str]) -> None:
    manifest = {"schema": "tinylight-run/1", "config_hash": config_hash(doc),
                "seeds": doc.get("seeds", []), "backend": backend_name(),
                "artifacts": sorted(artifacts)}
    with open(os.path.join(out_dir, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)


def build_rule_policy(spec: dict):
    kind = spec["kind"]
    if kind == "fixed_time":
        return FixedTimePolicy(cycle_s=int(spec.get("cycle_s", 30)))
    if kind == "max_pressure":
        return MaxPressurePolicy()
    if kind == "sotl":
        return SOTLPolicy(theta_green=float(spec.get("theta_green", 4.0)),
                          theta_red=float(spec.get("theta_red", 6.0)),
                          min_green_s=int(spec.get("min_green_s", 10)))
    raise ConfigError(f"not a rule agent: {kind!r}")


def load_checkpoint_policy(scenario, hp: HyperParams, ckpt_dir: str):
    template = make_sim(scenario)
    subs, adapters = {}, {}
    for inter in scenario.network.intersections:
        path = os.path.join(ckpt_dir, f"subgraph_{inter.id}.json")
        subs[inter.id] = SubGraph.load(path)
        adapters[inter.id] = FeatureAdapter(template, inter.id, hp.normalize_features)
    return SubGraphPolicy(subs, adapters)


def summarize(rows: list[tuple[int, float, float]], fh) -> dict:
    fh.write("seed,avg_travel_time,throughput\n")
    for seed, att, thr in rows:
        fh.write(f"{seed},{att:.6f},{thr:.6f}\n")
    atts = np.array([r[1] for r in rows])
    thrs = np.array([r[2] for r in rows])
    out = {"avg_travel_time_mean": float(atts.mean()),
           "throughput_mean": float(thrs.mean())}
    fh.write(f"mean,{atts.mean():.6f},{thrs.mean():.6f}\n")
    if len(rows) >= 2:
        out["avg_travel_time_std"] = float(atts.std(ddof=1))
        out["throughput_std"] = float(thrs.std(ddof=1))
        fh.write(f"std,{atts.std(ddof=1):.6f},{thrs.std(ddof=1):.6f}\n")
    return out


def _evaluate_seed(policy, scenario, hp, duration_s, seed, jitter, csv_path):
    with open(csv_path, "w", newline="\n") as fh:
        return evaluate_policy(policy, scenario, hp, duration_s,
                               jitter_seed=seed if jitter else None, csv_fh=fh)


def cmd_simulate(args) -> int:
    doc = load_config(args.config)
    hp = HyperParams.from_dict(doc.get("hyperparams", {}))
    scenario = resolve_scenario(doc["scenario"], doc.get("scenario_args"))
    seeds = [args.seed] if args.seed is not None else doc["seeds"]
    os.makedirs(args.out, exist_ok=True)
    spec = doc["agent"]
    if spec["kind"] == "checkpoint":
        policy = load_checkpoint_policy(scenario, hp, spec["dir"])
    else:
        policy = build_rule_policy(spec)
    rows, artifacts = [], []
    for seed in seeds:
        csv_path = os.path.join(args.out, f"metrics_seed{seed}.csv")
        m = _evaluate_seed(policy, scenario, hp, doc["duration_s"], seed,
                           doc["jitter"], csv_path)
        rows.append((seed, m["avg_travel_time"], m["throughput"]))
        artifacts.append(os.path.basename(csv_path))
    with open(os.path.join(args.out, "summary.csv"), "w", newline="\n") as fh:
        summary = summarize(rows, fh)
    artifacts.append("summary.csv")
    write_manifest(args.out, doc, artifacts)
    print(json.dumps({"agent": spec["kind"], **summary}))
    return 0


def _train_one(kind: str, scenario, hp: HyperParams, seed: int, seed_dir: str):
    os.makedirs(seed_dir, exist_ok=True)
    artifacts = []
    if kind == "ecolight":
        models, rows = train_ecolight(scenario, hp, seed)
        policy = EcoLightPolicy(models)
        episodes_iter = rows
        alpha_log = []
        subs, training = None, None
    elif kind == "tlrp":
        subs, training, rows = train_tlrp(scenario, hp, seed)
        policy = SubGraphPolicy(subs, training.adapters)
        episodes_iter = rows
        alpha_log = []
    else:
        subs, training, search, refine_rows = train_tinylight(scenario, hp, seed)
        policy = SubGraphPolicy(subs, training.adapters)
        episodes_iter = search.episodes + refine_rows
        alpha_log = search.alpha_log

    with open(os.path.join(seed_dir, "episodes.csv"), "w", newline="\n") as fh:
        fh.write("phase,episode,epsilon,mean_td_loss,entropy_loss,"
                 "avg_travel_time,throughput\n")
        for r in episodes_iter:
            fh.write(f"{r.phase},{r.episode},{r.epsilon:.6f},{r.mean_td_loss:.6f},"
                     f"{r.entropy_loss:.6f},{r.avg_travel_time:.6f},"
                     f"{r.throughput:.6f}\n")
    artifacts.append("episodes.csv")

    if alpha_log:
        with open(os.path.join(seed_dir, "alpha_log.csv"), "w", newline="\n") as fh:
            fh.write("episode,intersection,layer,index,alpha\n")
            for ep, iid, layer, idx, val in alpha_log:
                fh.write(f"{ep},{iid},{layer},{idx},{val:.9f}\n")
        artifacts.append("alpha_log.csv")

    if subs is not None:
        for iid, sub in subs.items():
            ck = f"subgraph_{iid}.json"
            sub.save(os.path.join(seed_dir, ck))
            with open(os.path.join(seed_dir, f"manifest_{iid}.json"), "w") as fh:
                json.dump(sub.manifest(ck), fh, indent=2, sort_keys=True)
            artifacts += [ck, f"manifest_{iid}.json"]
            if kind == "tinylight":
                sgck = f"supergraph_{iid}.json"
                training.graphs[iid].save(os.path.join(seed_dir, sgck))
                artifacts.append(sgck)
            calib = _calibration_states(training, iid, sub)
            if calib:
                cpath = f"calibration_{iid}.json"
                with open(os.path.join(seed_dir, cpath), "w") as fh:
                    json.dump({"states": calib}, fh)
                artifacts.append(cpath)
    return policy, artifacts


def _calibration_states(training, iid: str, sub, limit: int = 500) -> list:
    if training is None:
        return []
    buf = training.buffers[iid]
    adapter = training.adapters[iid]
    states = []
    for tr in buf._items[:limit]:
        xs = adapter.select(tr.state, sub.feature_indices)
        states.append([x.tolist() for x in xs])
    return states


def cmd_train(args) -> int:
    doc = load_config(args.config)
    hp = HyperParams.from_dict(doc.get("hyperparams", {}))
    scenario = resolve_scenario(doc["scenario"], doc.get("scenario_args"))
    kind = doc["agent"]["kind"]
    if kind not in TRAINED_AGENTS:
        print(f"error: agent kind {kind!r} is not trainable", file=sys.stderr)
        return 1
    os.makedirs(args.out, exist_ok=True)
    rows, artifacts = [], []
    for seed in doc["seeds"]:
        seed_dir = os.path.join(args.out, f"seed{seed}")
        policy, seed_artifacts = _train_one(kind, scenario, hp, seed, seed_dir)
        csv_path = os.path.join(seed_dir, "metrics_eval.csv")
        m = _evaluate_seed(policy, scenario, hp, doc["duration_s"], seed,
                           doc["jitter"], csv_path)
        rows.append((seed, m["avg_travel_time"], m["throughput"]))
        artifacts += [f"seed{seed}/{a}" for a in seed_artifacts]
        artifacts.append(f"seed{seed}/metrics_eval.csv")
    with open(os.path.join(args.out, "summary.csv"), "w", newline="\n") as fh:
        summary = summarize(rows, fh)
    artifacts.append("summary.csv")
    write_manifest(args.out, doc, artifacts)
    print(json.dumps({"agent": kind, **summary}))
    return 0


def cmd_report(args) -> int:
    if args.model in BUILTIN_MODELS:
        rep = report(args.model)
    elif args.model.endswith(".json"):
        rep = report_subgraph(SubGraph.load(args.model))
    else:
        print(f"error: unknown model {args.model!r}; builtins: "
              f"{', '.join(BUILTIN_MODELS)} (or a sub-graph checkpoint path)",
              file=sys.stderr)
        return 1
    print(rep.render())
    if args.csv:
        with open(args.csv, "w", newline="\n") as fh:
            rep.to_csv(fh)
    return 0


def cmd_codegen(args) -> int:
    sub = SubGraph.load(args.checkpoint)
    calibration = None
    if args.calibration:
        with open(args.calibration) as fh:
            raw = json.load(fh)["states"]
        calibration = [[np.array(x, dtype=np.float64) for x in state]
                       for state in raw]
    opts = cg.CodegenOptions(precision=args.precision, prefix=args.prefix,
                             test_vector_count=args.vectors,
                             calibration_states=calibration)
    os.makedirs(args.out, exist_ok=True)
    source = cg.emit_c(sub, opts)
    model_path = os.path.join(args.out, f"{args.prefix}_model.c")
    with open(model_path, "w", newline="\n") as fh:
        fh.write(source)
    vs = cg.emit_test_vectors(sub, opts, seed=args.seed)
    vec_path = os.path.join(args.out, f"{args.prefix}_vectors.txt")
    cg.write_vectors(vs, vec_path)
    info = {
        "model": model_path, "vectors": vec_path,
        "precision": args.precision,
        "static_data_bytes": cg.static_data_bytes(sub, args.precision),
        "activation_buffer_bytes": cg.activation_buffer_bytes(sub, args.precision),
        "params": sub.num_params(),
    }
    print(json.dumps(info))
    ok = (info["static_data_bytes"] <= cg.ROM_BUDGET_BYTES
          and info["activation_buffer_bytes"] <= cg.RAM_BUDGET_BYTES)
    return 0 if ok else 2


def find_harness(explicit: str | None) -> list[str] | None:
    if explicit:
        return [explicit] if not explicit.endswith(".js") else ["node", explicit]
    env = os.environ.get("MCU_HARNESS")
    if env:
        return [env] if not env.endswith(".js") else ["node", env]
    on_path = shutil.which("mcu-harness")
    if on_path:
        return [on_path]
    here = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    for root in (os.getcwd(), here):
        cand = os.path.join(root, "harness", "dist", "cli.js")
        if os.path.exists(cand):
            return ["node", cand]
    return None


def cmd_verify(args) -> int:
    cmd = find_harness(args.harness)
    if cmd is None:
        print("error: verification harness not found (build harness/ or set "
              "MCU_HARNESS)", file=sys.stderr)
        return 1
    cmd += ["--source", args.source, "--vectors", args.vectors,
            "--tolerance", str(args.tolerance), "--margin", str(args.margin)]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    sys.stdout.write(proc.stdout)
    if proc.returncode != 0 and not proc.stdout.strip():
        sys.stderr.write(proc.stderr)
        return 1
    try:
        result = json.loads(proc.stdout.strip().splitlines()[-1])
    except (json.JSONDecodeError, IndexError):
        sys.stderr.write(proc.stderr)
        return 1
    if result.get("error"):
        return 1
    return 0 if result.get("pass") else 2


def cmd_compare(args) -> int:
    doc = load_config(args.config, need_agents=True)
    hp = HyperParams.from_dict(doc.get("hyperparams", {}))
    scenario = resolve_scenario(doc["scenario"], doc.get("scenario_args"))
    os.makedirs(args.out, exist_ok=True)
    table, artifacts = [], []
    for spec in doc["agents"]:
        kind = spec["kind"]
        label = spec.get("label", kind)
        rows = []
        for seed in doc["seeds"]:
            if kind in TRAINED_AGENTS:
                seed_dir = os.path.join(args.out, label, f"seed{seed}")
                policy, seed_artifacts = _train_one(kind, scenario, hp, seed, seed_dir)
                artifacts += [f"{label}/seed{seed}/{a}" for a in seed_artifacts]
            elif kind == "checkpoint":
                policy = load_checkpoint_policy(scenario, hp, spec["dir"])
            else:
                policy = build_rule_policy(spec)
            csv_path = os.path.join(args.out, f"metrics_{label}_seed{seed}.csv")
            m = _evaluate_seed(policy, scenario, hp, doc["duration_s"], seed,
                               doc["jitter"], csv_path)
            rows.append((seed, m["avg_travel_time"], m["throughput"]))
            artifacts.append(os.path.basename(csv_path))
        atts = np.array([r[1] for r in rows])
        thrs = np.array([r[2] for r in rows])
        table.append((label, atts.mean(), atts.std(ddof=1) if len(rows) > 1 else 0.0,
                      thrs.mean(), thrs.std(ddof=1) if len(rows) > 1 else 0.0))
    path = os.path.join(args.out, "comparison.csv")
    with open(path, "w", newline="\n") as fh:
        fh.write("model,travel_time_mean,travel_time_std,"
                 "throughput_mean,throughput_std\n")
        for label, am, asd, tm, tsd in table:
            fh.write(f"{label},{am:.6f},{asd:.6f},{tm:.6f},{tsd:.6f}\n")
    artifacts.append("comparison.csv")
    write_manifest(args.out, doc, artifacts)
    for label, am, asd, tm, tsd in table:
        print(f"{label}: travel_time {am:.2f} +- {asd:.2f} s/veh, "
              f"throughput {tm:.2f} +- {tsd:.2f} veh/min")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="tinylight",
        description="Tiny traffic-signal controllers: simulate, search, "
                    "account, generate C.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a policy on a scenario")
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("train", help="train tinylight / tlrp / ecolight")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_train)

    p = sub.add_parser("report", help="parameter/FLOP report")
    p.add_argument("--model", required=True,
                   help=f"one of {', '.join(BUILTIN_MODELS)} or a checkpoint path")
    p.add_argument("--csv", default=None)
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("codegen", help="emit standalone C for a sub-graph checkpoint")
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--precision", choices=("float32", "q15"), default="float32")
    p.add_argument("--prefix", default="tl")
    p.add_argument("--vectors", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--calibration", default=None)
    p.set_defaults(fn=cmd_codegen)

    p = sub.add_parser("verify", help="run the C harness on generated artifacts")
    p.add_argument("--source", required=True)
    p.add_argument("--vectors", required=True)
    p.add_argument("--tolerance", type=float, default=1e-5)
    p.add_argument("--margin", type=float, default=1e-4)
    p.add_argument("--harness", default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("compare", help="evaluate several agents on one scenario")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_compare)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ConfigError, ScenarioError, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
