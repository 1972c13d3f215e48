import math

import numpy as np
import pytest

import pfqaoa


def subsets(n):
    for mask in range(1 << n):
        yield mask, "".join("1" if mask >> i & 1 else "0" for i in range(n))


def covers(g, mask):
    return all(mask >> u & 1 or mask >> v & 1 for u, v in g.edges)


def brute_min_cover(g):
    return min(bin(m).count("1") for m, _ in subsets(g.n) if covers(g, m))


def test_graph_basics():
    g = pfqaoa.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4 and g.num_edges == 3
    assert g.has_edge(2, 1)
    assert g.complement().num_edges == 3
    assert pfqaoa.Graph.parse(g.serialize()) == g
    with pytest.raises(ValueError):
        pfqaoa.Graph(2, [(0, 0)])
    r = pfqaoa.Graph.regular(8, 3, 1)
    assert all(r.degree(v) == 3 for v in range(8))
    assert pfqaoa.Graph.erdos_renyi(6, 0.5, 7) == pfqaoa.Graph.erdos_renyi(6, 0.5, 7)


def test_diagonal_matches_qubo_and_objective():
    g = pfqaoa.Graph.erdos_renyi(5, 0.5, 3)
    for kind in pfqaoa.kinds():
        values, offset = pfqaoa.diagonal(kind, g)
        for mask, bits in subsets(g.n):
            assert values[mask] + offset == pytest.approx(pfqaoa.qubo_cost(kind, g, bits), abs=1e-9)
    for mask, bits in subsets(g.n):
        value, feasible = pfqaoa.objective("maxpc", g, bits)
        values, offset = pfqaoa.diagonal("maxpc", g)
        assert values[mask] + offset == pytest.approx(-value)
        assert feasible


def test_ising_reproduces_the_diagonal():
    g = pfqaoa.Graph.complete(3)
    t = pfqaoa.ising("maxpcl", g)
    values, offset = pfqaoa.diagonal("maxpcl", g)
    assert t["constant"] == pytest.approx(offset)
    for mask, _ in subsets(3):
        z = [1 - 2 * (mask >> i & 1) for i in range(3)]
        e = sum(h * z[v] for v, h in t["linear"].items())
        e += sum(j * z[u] * z[v] for (u, v), j in t["quadratic"].items())
        assert e == pytest.approx(values[mask])
    assert pfqaoa.qubo_cost("maxpcl", g, "111") == pytest.approx(-3)


def test_exact_against_brute_force():
    for seed in range(10):
        g = pfqaoa.Graph.erdos_renyi(7, 0.4, seed)
        opt, witness = pfqaoa.exact("minvc", g)
        assert opt == brute_min_cover(g)
        mask = sum(1 << v for v in witness)
        assert covers(g, mask) and len(witness) == opt
        assert pfqaoa.exact("maxpc", g)[0] == g.num_edges - opt


def test_uniform_state_ratio_on_triangle():
    g = pfqaoa.Graph.complete(3)
    values, offset = pfqaoa.diagonal("maxpc", g)
    e = pfqaoa.expectation("maxpc", g, [], [], with_offset=False)
    assert pfqaoa.approximation_ratio(e, offset, 1) == pytest.approx(0.75, abs=1e-12)
    probs = pfqaoa.probabilities("maxpc", g, [], [])
    np.testing.assert_allclose(probs, np.full(8, 1 / 8))


def test_single_layer_probabilities_against_numpy():
    g = pfqaoa.Graph(3, [(0, 1), (1, 2)])
    values, _ = pfqaoa.diagonal("minvc", g, penalties=(3, 2))
    gamma, beta = 0.4, 0.7
    state = np.full(8, 1 / math.sqrt(8), dtype=complex) * np.exp(-1j * gamma * values)
    rx = np.array([[math.cos(beta), -1j * math.sin(beta)], [-1j * math.sin(beta), math.cos(beta)]])
    mixer = np.array([[1.0]])
    for _ in range(3):
        mixer = np.kron(mixer, rx)
    expected = np.abs(mixer @ state) ** 2
    got = pfqaoa.probabilities("minvc", g, [gamma], [beta], penalties=(3, 2))
    np.testing.assert_allclose(got, expected, atol=1e-12)


def test_optimize_and_postprocess():
    g = pfqaoa.Graph.erdos_renyi(5, 0.5, 4)
    r = pfqaoa.optimize("maxpc", g, 2, iterations=30, seed=1)
    assert len(r["trace"]) == 31
    assert r["expectation"] == pytest.approx(min(r["trace"]))
    again = pfqaoa.optimize("maxpc", g, 2, iterations=30, seed=1)
    np.testing.assert_array_equal(r["trace"], again["trace"])
    assert r["gammas"] == again["gammas"]
    probs = pfqaoa.probabilities("maxpc", g, r["gammas"], r["betas"])
    post = pfqaoa.postprocess("maxpc", g, probs)
    assert post.sum() == pytest.approx(1.0)
    for mask, p in enumerate(post):
        if p > 0:
            assert covers(g, mask)
    raw = pfqaoa.summed_probabilities("maxpc", g, probs)
    sp = pfqaoa.summed_probabilities("minvc", g, post)
    assert raw[0] <= raw[1] <= raw[2] <= 1 + 1e-12
    assert sp[0] <= sp[2] <= 1 + 1e-12


def test_penalty_anomaly_on_two_triangles():
    g = pfqaoa.Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    a = pfqaoa.penalty_anomaly(g)
    assert a["anomalous"]
    assert (a["lowest_cost"], a["second_cost"], a["next_feasible_cost"]) == (8, 9, 10)
    for mask in a["second_cost_states"]:
        assert not covers(g, mask)


def test_bad_inputs():
    g = pfqaoa.Graph.complete(3)
    with pytest.raises(Exception):
        pfqaoa.diagonal("vertexcover", g)
    with pytest.raises(Exception):
        pfqaoa.diagonal("maxpc", g, penalties=(3, 2))
    with pytest.raises(Exception):
        pfqaoa.approximation_ratio(0.0, 0.0, 0.0)
    assert sorted(pfqaoa.kinds()) == ["maxcl", "maxis", "maxpc", "maxpcl", "maxpi", "minvc"]
