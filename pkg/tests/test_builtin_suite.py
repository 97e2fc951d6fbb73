"""Whole-table checks over the bundled cases (including reconstructions)."""

from dilab.casework import builtin_cases, minimize_case, underline_delta

from conftest import random_weighted_graph
from test_wgraph import brute_force_cliques


def test_every_builtin_meets_its_bound_at_its_quoted_minimizer():
    for case in builtin_cases():
        res = minimize_case(case, grid=64, seed=0, check_reductions=False)
        assert res.meets_bound, (case.id, res.min_value, res.expected_bound)
        for sym, coord in (case.expected_argmin or {}).items():
            assert abs(res.argmin[sym] - coord) <= 0.02, (
                case.id, sym, res.argmin[sym], coord
            )


def test_underline_delta_decreasing_on_parity_classes():
    for residue, start in ((1, 9), (3, 11), (0, 16), (2, 30)):
        ns = [n for n in range(start, 201) if n % 4 == residue]
        vals = [underline_delta(n) for n in ns]
        assert all(a > b for a, b in zip(vals, vals[1:])), residue


def test_objective_at_least_one(rng):
    from dilab.casework import get_builtin, objective

    case = get_builtin("I.beta-petals")
    for _ in range(10):
        p, q = rng.uniform(0.05, 0.4, size=2)
        v = objective(case.family,
                      {"p": p, "q": q, "m": 1.0, "r": 1.0 - p - q})
        assert v >= 1.0


def test_clique_count_matches_brute_force_twelve_vertices(rng):
    g = random_weighted_graph(rng, max_vertices=12, min_vertices=12)
    from dilab.wgraph import enumerate_cliques

    assert {c.members for c in enumerate_cliques(g)} == brute_force_cliques(g)


def test_verify_mcmullen_parallel_workers_match(monkeypatch, capsys):
    from dilab.cli import main

    monkeypatch.setenv("DILAB_THREADS", "1")
    assert main(["verify-mcmullen", "--size", "3", "--trials", "6",
                 "--seed", "11", "--json"]) == 0
    serial = capsys.readouterr().out
    monkeypatch.setenv("DILAB_THREADS", "2")
    assert main(["verify-mcmullen", "--size", "3", "--trials", "6",
                 "--seed", "11", "--json"]) == 0
    parallel = capsys.readouterr().out
    assert serial == parallel
