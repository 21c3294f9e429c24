"""Resource-ledger golden tests: every builtin row and total, exact integers."""

import pytest

from tinylight.resources import atoms, report, report_subgraph
from tinylight.supergraph import SuperGraph, SuperGraphSpec, extract


# ------------------------------------------------------------------- atoms

def test_atomic_formulas():
    assert atoms.linear_params(12, 18) == 234
    assert atoms.linear_flops(12, 18) == 486 - 36          # plain linear, no relu
    assert atoms.fused_relu_linear_flops(12, 18) == 486
    assert atoms.relu_flops(32) == 64
    assert atoms.matmul_flops(1, 5, 32) == 320
    assert atoms.softmax_flops(5) == 15
    assert atoms.conv2d_params(32, 20) == 660
    assert atoms.conv2d_flops(32, 20, 9, 8) == 93_600
    with pytest.raises(ValueError):
        atoms.linear_params(0, 3)


def test_conv2d_1x1_equals_linear():
    for cin, cout in ((3, 7), (32, 20), (1, 4)):
        assert atoms.conv2d_params(cin, cout) == atoms.linear_params(cin, cout)
        assert atoms.conv2d_flops(cin, cout, 1, 1) == atoms.linear_flops(cin, cout)


# ----------------------------------------------------------------- goldens

def items(rep, side):
    rows = rep.param_items if side == "params" else rep.flops_items
    return [(it.description, it.amount) for it in rows]


def test_tinylight_golden():
    rep = report("TinyLight")
    assert items(rep, "params") == [
        ("Feature 1 to layer 2", 234),
        ("Feature 2 to layer 2", 198),
        ("Layer 2 to layer 3", 380),
        ("Layer 3 to output layer", 189),
    ]
    assert items(rep, "flops") == [
        ("Feature 1 to layer 2", 486),
        ("Feature 2 to layer 2", 378),
        ("Element-wise sum on layer 2", 18),
        ("Layer 2 to layer 3", 780),
        ("Layer 3 to output layer", 369),
    ]
    assert rep.params_total == 1_001
    assert rep.flops_total == 2_031


def test_ecolight_golden():
    rep = report("EcoLight")
    assert [a for _, a in items(rep, "params")] == [30, 110, 22]
    assert [a for _, a in items(rep, "flops")] == [70, 230, 42]
    assert rep.params_total == 162
    assert rep.flops_total == 342


def test_frap_golden():
    rep = report("FRAP")
    assert [a for _, a in items(rep, "params")] == [8, 8, 144, 8, 660, 100, 420, 21]
    assert rep.params_total == 1_369
    assert [a for _, a in items(rep, "flops")] == [
        20, 20, 304, 20, 93_600, 12_960, 61_920, 2_952, 10_368, 1_440, 72]
    assert rep.flops_total == 183_676


def test_mplight_equals_frap():
    frap, mp = report("FRAP"), report("MPLight")
    assert mp.params_total == frap.params_total == 1_369
    assert mp.flops_total == frap.flops_total == 183_676
    assert items(mp, "params") == items(frap, "params")
    assert items(mp, "flops") == items(frap, "flops")


def test_colight_golden():
    rep = report("CoLight")
    assert [a for _, a in items(rep, "params")] == [
        1_088, 1_056, 5_280, 5_280, 5_280, 1_056, 297]
    assert rep.params_total == 19_337
    assert [a for _, a in items(rep, "flops")] == [
        2_208, 2_144, 17_408, 10_720, 53_600, 1_600, 75, 10_720, 1_600, 192,
        2_144, 585]
    assert rep.flops_total == 102_996


def test_rule_based_models():
    sotl = report("SOTL")
    assert sotl.params_total == 2
    assert sotl.flops_total == 12 + 2
    mp = report("MaxPressure")
    assert mp.params_total == 0
    assert mp.flops_total == 12 + 12 + 9
    ft = report("FixedTime")
    assert ft.params_total == 0 and ft.flops_total == 0


def test_unknown_model():
    with pytest.raises(KeyError):
        report("PressLight")


def test_derived_ratios():
    tiny, colight, frap = report("TinyLight"), report("CoLight"), report("FRAP")
    assert colight.params_total / tiny.params_total == pytest.approx(19.32, abs=0.01)
    assert frap.flops_total / tiny.flops_total == pytest.approx(90.43, abs=0.01)


# -------------------------------------------------------------- additivity

def test_totals_are_sums_and_multiplicity_scales():
    rep = report("CoLight")
    assert rep.params_total == sum(a for _, a in items(rep, "params"))
    assert rep.flops_total == sum(a for _, a in items(rep, "flops"))
    assert atoms.linear_params(32, 32) * 5 == 5_280


# ---------------------------------------------------------------- subgraph

def sample_subgraph():
    """The published reference instance: inputs (12, 10) -> 18 -> 20 -> 9."""
    spec = SuperGraphSpec(input_dims=(12, 10), hidden2=(18,), hidden3=(20,),
                          output_dim=9)
    return extract(SuperGraph(spec, seed=0), keep=(2, 1, 1))


def test_report_subgraph_reference_instance():
    rep = report_subgraph(sample_subgraph())
    assert rep.params_total == 1_001
    assert rep.footprint_bytes == 4_004
    assert rep.footprint_quantized_bytes() == 2_002
    # honest per-dim FLOPs: feature 2 really has 10 inputs here
    assert rep.flops_total == 486 + 414 + 18 + 780 + 369


def test_report_subgraph_counts_actual_arrays():
    spec = SuperGraphSpec(input_dims=(5, 7, 3), hidden2=(6, 8), hidden3=(4,),
                          output_dim=2)
    sub = extract(SuperGraph(spec, seed=1), keep=(2, 1, 1))
    rep = report_subgraph(sub)
    assert rep.params_total == sub.num_params()


def test_render_and_csv(tmp_path):
    rep = report("TinyLight")
    text = rep.render()
    assert "1001" in text.replace(",", "") and "2031" in text.replace(",", "")
    path = tmp_path / "r.csv"
    with open(path, "w") as fh:
        rep.to_csv(fh)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "description,params,flops"
    assert lines[-1] == "Total,1001,2031"
    assert "Feature 2 to layer 2,198,378" in lines
    assert "Element-wise sum on layer 2,0,18" in lines
