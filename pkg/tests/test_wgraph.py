import json
from fractions import Fraction
from itertools import combinations

import pytest

from dilab.wgraph import (
    GraphTooLargeError,
    WeightedGraph,
    clique_polynomial,
    enumerate_cliques,
    growth_rate,
    induced_subgraph,
    scale_weights,
    vertex_sum,
    wide_subgraph,
)

from conftest import random_weighted_graph


def brute_force_cliques(g: WeightedGraph) -> set[frozenset]:
    """Oracle: check pairwise adjacency over every vertex subset."""
    ids = g.vertex_ids
    out = set()
    for k in range(len(ids) + 1):
        for combo in combinations(ids, k):
            if all(g.adjacent(u, v) for u, v in combinations(combo, 2)):
                out.add(frozenset(combo))
    return out


def brute_force_clique_poly(g: WeightedGraph) -> list[tuple[float, float]]:
    entries = sorted(
        (float(sum(g.vertices[v] for v in members)), (-1) ** len(members))
        for members in brute_force_cliques(g)
    )
    return merge_terms(entries)


def merge_terms(entries, tol=1e-9):
    """Cluster (exponent, coeff) pairs whose exponents agree to tol."""
    merged: list[tuple[float, float]] = []
    for w, c in sorted(entries):
        if merged and w - merged[-1][0] <= tol:
            merged[-1] = (merged[-1][0], merged[-1][1] + c)
        else:
            merged.append((w, float(c)))
    return [(w, c) for w, c in merged if c != 0.0]


# ---------------------------------------------------------------------------
# construction


def test_build_validation():
    with pytest.raises(ValueError):
        WeightedGraph.build({"a": 1.0}, [("a", "a")])
    with pytest.raises(ValueError):
        WeightedGraph.build({"a": 1.0}, [("a", "b")])
    with pytest.raises(ValueError):
        WeightedGraph.build({"a": 0.0}, [])
    with pytest.raises(ValueError):
        WeightedGraph.build({"a": -2}, [])


def test_json_weight_formats():
    g = WeightedGraph.from_json(json.dumps({
        "vertices": [
            {"id": "a", "weight": 0.5},
            {"id": "b", "weight": "1/3"},
            {"id": "c", "weight": {"num": 2, "den": 7}},
        ],
        "edges": [["a", "b"]],
    }))
    assert g.weight("b") == Fraction(1, 3)
    assert g.weight("c") == Fraction(2, 7)
    assert g.adjacent("a", "b")
    again = WeightedGraph.from_json(g.to_json())
    assert again == g


# ---------------------------------------------------------------------------
# cliques


def test_cliques_empty_graph_two_vertices():
    g = WeightedGraph.build({"v1": 1, "v2": 1}, [])
    cliques = enumerate_cliques(g)
    assert len(cliques) == 3
    assert {c.members for c in cliques} == {
        frozenset(), frozenset({"v1"}), frozenset({"v2"})
    }


def test_cliques_complete_k3():
    g = WeightedGraph.build(
        {"a": 1, "b": 1, "c": 1}, [("a", "b"), ("a", "c"), ("b", "c")]
    )
    assert len(enumerate_cliques(g)) == 8


def test_cliques_path():
    g = WeightedGraph.build(
        {"v1": 1, "v2": 1, "v3": 1}, [("v1", "v2"), ("v2", "v3")]
    )
    cliques = {c.members for c in enumerate_cliques(g)}
    assert cliques == brute_force_cliques(g)
    assert len(cliques) == 6


def test_cliques_match_oracle_random(rng):
    for _ in range(25):
        g = random_weighted_graph(rng, max_vertices=8)
        assert {c.members for c in enumerate_cliques(g)} == brute_force_cliques(g)


def test_clique_guard():
    g = WeightedGraph.build({f"v{i}": 1.0 for i in range(41)}, [])
    with pytest.raises(GraphTooLargeError):
        enumerate_cliques(g)
    assert len(enumerate_cliques(g, max_vertices=41)) == 42


# ---------------------------------------------------------------------------
# clique polynomial


def test_clique_poly_two_isolated():
    g = WeightedGraph.build({"a": 1, "b": 1}, [])
    assert clique_polynomial(g).terms == ((1.0, 0.0), (-2.0, 1.0))


def test_clique_poly_edge():
    g = WeightedGraph.build({"a": 1, "b": 1}, [("a", "b")])
    assert clique_polynomial(g).terms == ((1.0, 0.0), (-2.0, 1.0), (1.0, 2.0))


def test_clique_poly_k3_weights_112():
    g = WeightedGraph.build(
        {"a": 1, "b": 1, "c": 2}, [("a", "b"), ("a", "c"), ("b", "c")]
    )
    q = clique_polynomial(g)
    assert q.terms == ((1.0, 0.0), (-2.0, 1.0), (2.0, 3.0), (-1.0, 4.0))
    # oracle: direct sum over all 8 subsets
    assert [(e, c) for c, e in q.terms] == brute_force_clique_poly(g)


def test_clique_poly_matches_oracle_random(rng):
    for _ in range(20):
        g = random_weighted_graph(rng, max_vertices=7)
        got = merge_terms((e, c) for c, e in clique_polynomial(g).terms)
        want = brute_force_clique_poly(g)
        assert len(got) == len(want)
        for (eg, cg), (ew, cw) in zip(got, want):
            assert abs(eg - ew) < 1e-9
            assert cg == cw


def test_clique_poly_exact_rational_cancellation():
    # weights 1/4, 1/2, 1/4 with one edge: the 1/2 terms cancel exactly
    g = WeightedGraph.build(
        {"u1": Fraction(1, 4), "u2": Fraction(1, 2), "u3": Fraction(1, 4)},
        [("u1", "u3")],
    )
    assert clique_polynomial(g).terms == ((1.0, 0.0), (-2.0, 0.25))


# ---------------------------------------------------------------------------
# growth rate


def test_growth_two_isolated():
    g = WeightedGraph.build({"a": 1, "b": 1}, [])
    assert abs(growth_rate(g) - 2.0) < 1e-9


def test_growth_k2_polynomial_case():
    g = WeightedGraph.build({"a": 1, "b": 1}, [("a", "b")])
    assert growth_rate(g) == 1.0


def test_growth_terminal_nine_strand_graph():
    # integer-weight terminal configuration for nine strands; the growth
    # rate is the largest root of x^9 - 2x^5 - 2x^4 + 1 (approx. 1.34372)
    g = WeightedGraph.build(
        {"p1": 4, "p2": 4, "q1": 5, "q2": 5, "u1": 9, "u2": 9, "m1": 9},
        [(p, q) for p in ("p1", "p2") for q in ("q1", "q2")],
    )
    lam = growth_rate(g)
    assert abs(lam - 1.34372) < 5e-6


def test_growth_empty():
    assert growth_rate(WeightedGraph.build({}, [])) == 1.0


# ---------------------------------------------------------------------------
# vertex sum


def test_vertex_sum_singleton_is_relabel():
    g = WeightedGraph.build({"a": 1, "b": 2}, [("a", "b")])
    h = vertex_sum(g, ["a"])
    assert h.vertices == {"a": 1, "b": 2}
    assert h.adjacent("a", "b")


def test_vertex_sum_figure_example():
    # v1 adjacent to u3; v2 adjacent to u2 and u3: the sum keeps only u3
    g = WeightedGraph.build(
        {"v1": 1.5, "v2": 2.5, "u1": 1, "u2": 1, "u3": 1},
        [("v1", "u3"), ("v2", "u2"), ("v2", "u3")],
    )
    h = vertex_sum(g, ["v1", "v2"])
    assert h.weight("v1+v2") == 4.0
    assert h.neighbors("v1+v2") == {"u3"}
    assert h.neighbors("u2") == set()


def test_vertex_sum_two_isolated_unit_vertices():
    # summing the two generators leaves a single weight-2 generator whose
    # semigroup has polynomial growth; oracle: #(powers with weight <= T)
    # is T/2 + 1, so the growth rate is exactly 1
    g = WeightedGraph.build({"a": 1, "b": 1}, [])
    h = vertex_sum(g, ["a", "b"])
    assert h.vertices == {"a+b": 2}
    counts = [1 + T // 2 for T in range(1, 60)]
    rates = [counts[T - 1] ** (1.0 / T) for T in range(1, 60)]
    assert rates[-1] < 1.1  # oracle tends to 1
    assert growth_rate(h) == 1.0
    assert growth_rate(h) <= growth_rate(g)


def test_vertex_sum_errors():
    g = WeightedGraph.build({"a": 1}, [])
    with pytest.raises(ValueError):
        vertex_sum(g, [])
    with pytest.raises(ValueError):
        vertex_sum(g, ["zz"])


# ---------------------------------------------------------------------------
# growth-rate properties (small sample; the full suite runs in acceptance)


def test_scaling_property(rng):
    for _ in range(5):
        g = random_weighted_graph(rng, max_vertices=7)
        lam = growth_rate(g)
        for alpha in (0.5, 2.0, 3.0):
            lhs = growth_rate(scale_weights(g, alpha))
            assert abs(lhs - lam ** (1.0 / alpha)) <= 1e-9


def test_monotonicity_wide_induced_sum(rng):
    for _ in range(5):
        g = random_weighted_graph(rng, max_vertices=7)
        lam = growth_rate(g)
        ids = list(g.vertex_ids)

        bumped = dict(g.vertices)
        bumped[ids[0]] = bumped[ids[0]] + 1.0
        assert growth_rate(WeightedGraph.build(bumped, g.edges)) <= lam + 1e-9

        keep = ids[: max(1, len(ids) // 2)]
        assert growth_rate(induced_subgraph(g, keep)) <= lam + 1e-9

        if g.edges:
            drop = [next(iter(g.edges))]
            assert growth_rate(wide_subgraph(g, drop)) >= lam - 1e-9

        if len(ids) >= 2:
            assert growth_rate(vertex_sum(g, ids[:2])) <= lam + 1e-9


def test_log_convexity(rng):
    for _ in range(5):
        g = random_weighted_graph(rng, max_vertices=6)
        ids = g.vertex_ids
        w1 = {v: float(rng.uniform(0.5, 3.0)) for v in ids}
        w2 = {v: float(rng.uniform(0.5, 3.0)) for v in ids}
        l1 = growth_rate(WeightedGraph.build(w1, g.edges))
        l2 = growth_rate(WeightedGraph.build(w2, g.edges))
        for t in (0.3, 0.5, 0.7):
            mix = {v: t * w1[v] + (1 - t) * w2[v] for v in ids}
            lm = growth_rate(WeightedGraph.build(mix, g.edges))
            assert lm <= l1**t * l2 ** (1 - t) + 1e-9
