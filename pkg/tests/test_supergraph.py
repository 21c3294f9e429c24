"""Super-graph tests: forward rule, objectives, extraction, backends, theorems."""

import math

import numpy as np
import pytest

from tinylight import nn
from tinylight.supergraph import (SubGraph, SuperGraph, SuperGraphSpec,
                                  combined_loss, count_subgraphs, extract,
                                  random_path, top_k_by_alpha)
from tinylight.supergraph import backend as backend_mod
from tinylight.supergraph import kernels as np_kernels


def small_spec(p=3):
    return SuperGraphSpec(input_dims=(3, 5, 2), hidden2=(4, 6), hidden3=(5, 4),
                          output_dim=p)


def random_inputs(spec, rng, batch=None):
    if batch is None:
        return [rng.normal(size=d) for d in spec.input_dims]
    return [rng.normal(size=(batch, d)) for d in spec.input_dims]


def brute_force_forward(sg, inputs):
    """Independent oracle: expand the weighted double sums explicitly."""
    a1, a2, a3 = sg.alphas()
    spec = sg.spec
    l1, l2, l3 = spec.layer_sizes
    o2 = []
    for j in range(l2):
        total = np.zeros(spec.hidden2[j])
        for i in range(l1):
            total = total + a1[i] * nn.relu(
                nn.linear(inputs[i], sg.edge_weight("a", i, j), sg.edge_bias("a", i, j)))
        o2.append(total)
    o3 = []
    for j in range(l3):
        total = np.zeros(spec.hidden3[j])
        for i in range(l2):
            total = total + a2[i] * nn.relu(
                nn.linear(o2[i], sg.edge_weight("b", i, j), sg.edge_bias("b", i, j)))
        o3.append(total)
    q = np.zeros(spec.output_dim)
    for i in range(l3):
        q = q + a3[i] * nn.linear(o3[i], sg.edge_weight("c", i), sg.edge_bias("c", i))
    return q


# ----------------------------------------------------------------- forward

def test_forward_matches_bruteforce_oracle():
    rng = np.random.default_rng(0)
    sg = SuperGraph(small_spec(), seed=1)
    for layer in sg.alpha_logits:
        layer[:] = rng.normal(size=layer.size)
    for _ in range(10):
        inputs = random_inputs(sg.spec, rng)
        assert np.allclose(sg.forward(inputs), brute_force_forward(sg, inputs),
                           atol=1e-10)


def test_forward_one_hot_alpha_is_plain_mlp():
    rng = np.random.default_rng(1)
    sg = SuperGraph(small_spec(), seed=2)
    sg.alpha_logits[0][:] = [-40.0, 40.0, -40.0]   # select feature 1
    sg.alpha_logits[1][:] = [40.0, -40.0]          # block 0
    sg.alpha_logits[2][:] = [-40.0, 40.0]          # block 1
    inputs = random_inputs(sg.spec, rng)
    h1 = nn.relu(nn.linear(inputs[1], sg.edge_weight("a", 1, 0), sg.edge_bias("a", 1, 0)))
    h2 = nn.relu(nn.linear(h1, sg.edge_weight("b", 0, 1), sg.edge_bias("b", 0, 1)))
    q = nn.linear(h2, sg.edge_weight("c", 1), sg.edge_bias("c", 1))
    assert np.allclose(sg.forward(inputs), q, atol=1e-9)


def test_forward_zero_theta_ignores_features():
    rng = np.random.default_rng(2)
    sg = SuperGraph(small_spec(), seed=3)
    sg.theta[:] = 0.0
    q1 = sg.forward(random_inputs(sg.spec, rng))
    q2 = sg.forward(random_inputs(sg.spec, rng))
    assert np.allclose(q1, q2, atol=1e-12)


def test_forward_batch_consistent_with_single():
    rng = np.random.default_rng(3)
    sg = SuperGraph(small_spec(), seed=4)
    xs = random_inputs(sg.spec, rng, batch=7)
    qb = sg.forward(xs)
    for b in range(7):
        assert np.allclose(qb[b], sg.forward([x[b] for x in xs]), atol=1e-12)


def test_backend_equivalence():
    if not backend_mod.HAS_NUMBA:
        pytest.skip("numba unavailable")
    rng = np.random.default_rng(4)
    sg = SuperGraph(small_spec(), seed=5)
    for layer in sg.alpha_logits:
        layer[:] = rng.normal(size=layer.size)
    X = sg.pack_inputs(random_inputs(sg.spec, rng, batch=9))
    a1, a2, a3 = sg.alphas()

    from tinylight.supergraph import kernels_numba as nb_kernels
    q_np, caches_np = np_kernels.forward_cached(X, sg.theta, sg.layout, a1, a2, a3)
    q_nb, caches_nb = nb_kernels.forward_cached(X, sg.theta, sg.layout, a1, a2, a3)
    assert np.allclose(q_np, q_nb, atol=1e-12)

    d_q = rng.normal(size=q_np.shape)
    outs_np = np_kernels.backward(X, sg.theta, sg.layout, a1, a2, a3, caches_np, d_q)
    outs_nb = nb_kernels.backward(X, sg.theta, sg.layout, a1, a2, a3, caches_nb, d_q)
    for g_np, g_nb in zip(outs_np, outs_nb):
        assert np.allclose(g_np, g_nb, atol=1e-12)


# -------------------------------------------------------------- objectives

def test_entropy_loss_extremes():
    sg = SuperGraph(SuperGraphSpec(input_dims=tuple([3] * 37), output_dim=9), seed=0)
    # uniform logits: ln 37 + ln 5 + ln 5
    assert sg.entropy_loss() == pytest.approx(math.log(37) + 2 * math.log(5), abs=1e-9)
    sg.alpha_logits[0][0] = 200.0
    sg.alpha_logits[1][1] = 200.0
    sg.alpha_logits[2][2] = 200.0
    assert sg.entropy_loss() == pytest.approx(0.0, abs=1e-6)


def test_entropy_loss_random_matches_oracle():
    import mpmath
    rng = np.random.default_rng(5)
    sg = SuperGraph(small_spec(), seed=6)
    for layer in sg.alpha_logits:
        layer[:] = rng.normal(size=layer.size)
    with mpmath.workdps(40):
        expect = 0.0
        for a in sg.alphas():
            expect += float(-sum(mpmath.mpf(x) * mpmath.log(mpmath.mpf(x)) for x in a))
    assert sg.entropy_loss() == pytest.approx(expect, rel=1e-10)


def test_combined_loss():
    assert combined_loss(1.0, 2.0, beta=16.0) == pytest.approx(33.0)
    assert combined_loss(5.0, 100.0, beta=0.0) == pytest.approx(5.0)
    with pytest.raises(ValueError):
        combined_loss(1.0, 1.0, beta=-0.1)


def test_count_subgraphs():
    assert count_subgraphs(SuperGraphSpec(input_dims=tuple([1] * 37),
                                          output_dim=9)) == 925
    assert count_subgraphs(SuperGraphSpec(input_dims=(2,), hidden2=(1,),
                                          hidden3=(1,), output_dim=2)) == 1
    assert count_subgraphs(SuperGraphSpec(input_dims=(2, 3), hidden2=(1, 2, 3),
                                          hidden3=(1, 2, 3, 4), output_dim=2)) == 24


# -------------------------------------------------------------- extraction

def test_extract_unique_path_one_hot():
    sg = SuperGraph(small_spec(), seed=7)
    sg.alpha_logits[0][:] = [-50.0, 50.0, -50.0]
    sg.alpha_logits[1][:] = [50.0, -50.0]
    sg.alpha_logits[2][:] = [-50.0, 50.0]
    sub = extract(sg, keep=(1, 1, 1))
    assert sub.feature_indices == [1]
    assert sub.hidden2 == sg.spec.hidden2[0]
    assert sub.hidden3 == sg.spec.hidden3[1]


def test_extract_keep1_forward_equals_onehot_supergraph():
    rng = np.random.default_rng(8)
    sg = SuperGraph(small_spec(), seed=9)
    for layer in sg.alpha_logits:
        layer[:] = rng.normal(size=layer.size)
    sub = extract(sg, keep=(1, 1, 1))
    i, j, m = (sub.feature_indices[0],
               sg.spec.hidden2.index(sub.hidden2),
               sg.spec.hidden3.index(sub.hidden3))
    clone = sg.clone()
    for layer in clone.alpha_logits:
        layer[:] = -1e4
    clone.alpha_logits[0][i] = 1e4
    clone.alpha_logits[1][j] = 1e4
    clone.alpha_logits[2][m] = 1e4
    for _ in range(20):
        inputs = random_inputs(sg.spec, rng)
        q_sub = sub.forward([inputs[i]])
        q_sup = clone.forward(inputs)
        assert np.allclose(q_sub, q_sup, atol=1e-9)


def test_extract_keep2_is_renormalized_mixture():
    rng = np.random.default_rng(9)
    sg = SuperGraph(small_spec(), seed=10)
    for layer in sg.alpha_logits:
        layer[:] = rng.normal(size=layer.size)
    sub = extract(sg, keep=(2, 1, 1))
    a1 = sg.alphas()[0]
    k0, k1 = sub.feature_indices
    j = sg.spec.hidden2.index(sub.hidden2)
    m = sg.spec.hidden3.index(sub.hidden3)
    w = a1[[k0, k1]] / a1[[k0, k1]].sum()
    for _ in range(10):
        inputs = random_inputs(sg.spec, rng)
        h = (w[0] * nn.relu(nn.linear(inputs[k0], sg.edge_weight("a", k0, j),
                                      sg.edge_bias("a", k0, j)))
             + w[1] * nn.relu(nn.linear(inputs[k1], sg.edge_weight("a", k1, j),
                                        sg.edge_bias("a", k1, j))))
        h2 = nn.relu(nn.linear(h, sg.edge_weight("b", j, m), sg.edge_bias("b", j, m)))
        q = nn.linear(h2, sg.edge_weight("c", m), sg.edge_bias("c", m))
        assert np.allclose(sub.forward([inputs[k0], inputs[k1]]), q, atol=1e-9)


def test_extract_matches_sort_oracle():
    rng = np.random.default_rng(10)
    for trial in range(50):
        sg = SuperGraph(small_spec(), seed=trial)
        for layer in sg.alpha_logits:
            layer[:] = rng.normal(size=layer.size)
        sub = extract(sg, keep=(2, 1, 1))
        a1, a2, a3 = sg.alphas()
        best2 = sorted(sorted(range(a1.size), key=lambda i: (-a1[i], i))[:2])
        assert sorted(sub.feature_indices) == best2
        assert sub.hidden2 == sg.spec.hidden2[int(np.argmax(a2))]
        assert sub.hidden3 == sg.spec.hidden3[int(np.argmax(a3))]


def test_extract_tie_breaks_low_index():
    sg = SuperGraph(small_spec(), seed=11)   # all logits zero: uniform ties
    sub = extract(sg, keep=(2, 1, 1))
    assert sub.feature_indices == [0, 1]
    assert sub.hidden2 == sg.spec.hidden2[0]
    assert sub.hidden3 == sg.spec.hidden3[0]


def test_extract_keep_bounds():
    sg = SuperGraph(small_spec(), seed=12)
    with pytest.raises(ValueError):
        extract(sg, keep=(4, 1, 1))


def test_random_path_reproducible_and_trivial():
    spec = small_spec()
    s1 = random_path(spec, seed=3)
    s2 = random_path(spec, seed=3)
    assert s1.feature_indices == s2.feature_indices
    assert s1.hidden2 == s2.hidden2 and s1.hidden3 == s2.hidden3
    tiny = SuperGraphSpec(input_dims=(2,), hidden2=(3,), hidden3=(4,), output_dim=2)
    only = random_path(tiny, seed=0, keep=(1, 1, 1))
    assert only.feature_indices == [0]


def test_random_path_frequencies():
    spec = SuperGraphSpec(input_dims=tuple([2] * 6), output_dim=3)
    counts = np.zeros(5)
    n = 10_000
    for seed in range(n):
        sub = random_path(spec, seed=seed, keep=(1, 1, 1))
        counts[spec.hidden2.index(sub.hidden2)] += 1
    freq = counts / n
    assert np.all(np.abs(freq - 0.2) <= 0.02)


def test_subgraph_checkpoint_roundtrip(tmp_path):
    sg = SuperGraph(small_spec(), seed=13)
    sub = extract(sg, keep=(2, 1, 1))
    path = str(tmp_path / "sub.json")
    sub.save(path)
    back = SubGraph.load(path)
    rng = np.random.default_rng(14)
    xs = [rng.normal(size=d) for d in sub.input_dims]
    assert np.allclose(sub.forward(xs), back.forward(xs), atol=0)
    assert back.feature_indices == sub.feature_indices


def test_supergraph_checkpoint_roundtrip(tmp_path):
    rng = np.random.default_rng(15)
    sg = SuperGraph(small_spec(), seed=16)
    for layer in sg.alpha_logits:
        layer[:] = rng.normal(size=layer.size)
    path = str(tmp_path / "sg.json")
    sg.save(path)
    back = SuperGraph.load(path)
    inputs = random_inputs(sg.spec, rng)
    assert np.allclose(sg.forward(inputs), back.forward(inputs), atol=0)


# ----------------------------------------------------- theorem properties

def test_existence_property_extraction_always_connected():
    rng = np.random.default_rng(17)
    spec = small_spec()
    sg = SuperGraph(spec, seed=18)
    for _ in range(1000):
        for layer in sg.alpha_logits:
            layer[:] = rng.normal(size=layer.size) * rng.uniform(0.1, 30)
        sub = extract(sg, keep=(2, 1, 1))
        # connectivity oracle: walk input -> hidden -> hidden -> output
        assert len(sub.w_in) == 2
        assert all(w.shape[1] == sub.hidden2 for w in sub.w_in)
        assert sub.w_mid.shape == (sub.hidden2, sub.hidden3)
        assert sub.w_out.shape == (sub.hidden3, sub.output_dim)


def test_sparsity_property_entropy_descent():
    rng = np.random.default_rng(19)
    spec = SuperGraphSpec(input_dims=tuple([3] * 37), output_dim=9)
    for trial in range(5):
        sg = SuperGraph(spec, seed=trial)
        for layer in sg.alpha_logits:
            layer[:] = rng.normal(size=layer.size)
        for _ in range(2000):
            grads = sg.entropy_grad_logits()
            for z, g in zip(sg.alpha_logits, grads):
                z -= 1.0 * g
        assert all(a.max() >= 0.99 for a in sg.alphas())
