import textwrap
from fractions import Fraction

import numpy as np
import pytest

from dilab.casework import (
    Constraint,
    GraphFamily,
    Group,
    accounting_constraints,
    builtin_cases,
    case_from_dict,
    durand_kerner,
    get_builtin,
    in_underline_N,
    instantiate,
    integer_search_deltan,
    load_case_toml,
    lower_bound,
    minimize_case,
    objective,
    terminal_family,
    underline_delta,
    underline_delta_poly,
)
from dilab.wgraph import growth_rate


# ---------------------------------------------------------------------------
# families


def test_instantiate_k22():
    fam = GraphFamily(
        (Group("p", "p", 2), Group("q", "q", 2)), (("p", "q"),)
    )
    g = instantiate(fam, {"p": 1, "q": 1})
    assert len(g) == 4
    assert len(g.edges) == 4  # complete bipartite join
    assert set(g.vertex_ids) == {"p1", "p2", "q1", "q2"}


def test_instantiate_validation():
    fam = GraphFamily((Group("p", "p", 1),), ())
    with pytest.raises(ValueError):
        instantiate(fam, {})
    with pytest.raises(ValueError):
        instantiate(fam, {"p": 0})
    with pytest.raises(ValueError):
        GraphFamily((Group("p", "p", 1),), (("p", "p"),))
    with pytest.raises(ValueError):
        GraphFamily((Group("p", "p", 1),), (("p", "zz"),))


def test_instantiate_half_n_family():
    fam = GraphFamily((Group("u1", "u1", 1), Group("u2", "u2", 1)), ())
    g = instantiate(fam, {"u1": Fraction(1, 4), "u2": Fraction(1, 4)})
    assert abs(growth_rate(g) - 16.0) < 1e-9


def test_instantiate_terminal_family_nine():
    # at the parity-rule integers the growth rate is the ninth power of the
    # largest root of x^9 - 2x^5 - 2x^4 + 1 (cross-checked both ways)
    g = instantiate(
        terminal_family(),
        {"p": Fraction(4, 9), "q": Fraction(5, 9), "u": 1, "m": 1},
    )
    assert len(g) == 7
    lam = growth_rate(g)
    want = underline_delta(9) ** 9
    assert abs(lam - want) < 1e-8


# ---------------------------------------------------------------------------
# objective


def test_objective_half_n():
    fam = GraphFamily((Group("u1", "u1", 1), Group("u2", "u2", 1)), ())
    assert abs(objective(fam, {"u1": 0.25, "u2": 0.25}) - 16.0) < 1e-9


def test_objective_three_curve_chain():
    fam = GraphFamily(
        (Group("u1", "u1", 1), Group("u2", "u2", 1), Group("u3", "u3", 1)),
        (("u1", "u3"),),
    )
    v = objective(
        fam, {"u1": Fraction(1, 4), "u2": Fraction(1, 2), "u3": Fraction(1, 4)}
    )
    assert abs(v - 16.0) < 1e-9


def test_objective_trivial_cases():
    one = GraphFamily((Group("v", "v", 1),), ())
    assert objective(one, {"v": 1.0}) == 1.0
    assert objective(one, {"v": 2.0}) == 1.0


# ---------------------------------------------------------------------------
# parity-root bookkeeping


def test_underline_delta_polynomials():
    assert underline_delta_poly(9).coeffs == (1, 0, 0, 0, -2, -2, 0, 0, 0, 1)
    assert underline_delta_poly(16).coeffs == (
        1, 0, 0, 0, 0, 0, 0, -2, 0, -2, 0, 0, 0, 0, 0, 0, 1
    )
    with pytest.raises(ValueError):
        underline_delta_poly(2)


def test_underline_delta_table_values():
    assert abs(underline_delta(3) - 2.61803) < 5e-6
    assert abs(underline_delta(16) - 1.18129) < 5e-6
    assert abs(underline_delta(30) - 1.09309) < 5e-6


def test_in_underline_N():
    assert in_underline_N(9)
    assert not in_underline_N(7)
    assert not in_underline_N(26)
    assert in_underline_N(16)
    assert in_underline_N(30)
    with pytest.raises(ValueError):
        in_underline_N(2)


def test_lower_bound():
    assert abs(lower_bound(9) - underline_delta(9)) < 1e-12
    assert abs(lower_bound(6) - 14.5 ** (1.0 / 6.0)) < 1e-12


# ---------------------------------------------------------------------------
# accounting constraints


def c_dict(c: Constraint) -> dict:
    return dict(c.coeffs)


def test_accounting_basic():
    cs = accounting_constraints("basic")
    assert c_dict(cs[0]) == {"m": 1.0} and cs[0].bound == 1.0
    assert c_dict(cs[1]) == {"p0": 1.0, "q0": 1.0, "r0": 1.0}


def test_accounting_1b_kappa_zero():
    (c,) = accounting_constraints("1b", kappa=0.0)
    assert c_dict(c) == {"p0": -1.0, "q0": 1.0, "r0": 1.0, "p'": 2.0 / 3.0}
    assert c.bound == 1.0


def test_accounting_2b_unit_kappas():
    (c,) = accounting_constraints("2b", kappa1=1.0, kappa2=1.0)
    assert c_dict(c) == {
        "p0": 0.0,
        "q0": 0.0,
        "r0": 1.0,
        "p'": 1.0 / 3.0,
        "q'": 1.0 / 3.0,
    }


def test_accounting_1a_2a():
    (c,) = accounting_constraints("1a")
    assert c_dict(c) == {"p0": 1.0, "q0": 1.0, "p'": 1.0 / 3.0}
    (c,) = accounting_constraints("2a")
    assert c_dict(c)["q'"] == pytest.approx(1.0 / 3.0)


def test_accounting_kappa_range():
    with pytest.raises(ValueError):
        accounting_constraints("1b", kappa=2.5)
    with pytest.raises(ValueError):
        accounting_constraints("2b", kappa1=-1.5, kappa2=0.0)
    with pytest.raises(ValueError):
        accounting_constraints("nope")


# ---------------------------------------------------------------------------
# integer search


def test_integer_search_nine():
    res = integer_search_deltan(9)
    assert res["pq"] == (4, 5)
    assert abs(res["value"] - underline_delta(9)) < 1e-9
    # candidates off the diagonal p+q = m fail the palindromicity filter
    rejected = [c for c in res["candidates"] if not c["reciprocal"]]
    assert all(c["p"] + c["q"] != 9 for c in rejected)


def test_integer_search_balanced_even_pair_filtered():
    # for m = 16 the (8, 8) candidate is palindromic but its reciprocal has
    # eight roots of maximum modulus, so the uniqueness filter drops it even
    # though its growth rate would undercut the true winner
    res = integer_search_deltan(16)
    assert res["pq"] == (7, 9)
    entry = next(
        c for c in res["candidates"] if (c["p"], c["q"]) == (8, 8)
    )
    assert entry["reciprocal"] is True
    assert entry["unique_max"] is False


def test_integer_search_m_too_small():
    with pytest.raises(ValueError):
        integer_search_deltan(4)


def test_durand_kerner_cubic():
    from dilab.exppoly import IntPoly

    p = IntPoly.from_coeffs([-6, 11, -6, 1])  # (x-1)(x-2)(x-3)
    roots = sorted(z.real for z in durand_kerner(p))
    assert np.allclose(roots, [1.0, 2.0, 3.0], atol=1e-9)
    assert max(abs(z.imag) for z in durand_kerner(p)) < 1e-9


# ---------------------------------------------------------------------------
# minimizer


def test_minimize_half_n():
    res = minimize_case(get_builtin("I.half-n"), seed=0)
    assert abs(res.min_value - 16.0) < 1e-6
    assert abs(res.argmin["u1"] - 0.25) < 0.002
    assert res.meets_bound


def test_minimize_integer_case_respects_n():
    from dataclasses import replace

    case = replace(get_builtin("I.deltan"), integer_n=13)
    res = minimize_case(case)
    assert res.argmin["p"] == 6 and res.argmin["q"] == 7
    assert abs(res.min_value - underline_delta(13) ** 13) < 1e-6
    assert res.meets_bound


def test_fast_and_contract_objectives_agree():
    from dilab.casework import _CompiledFamily

    case = get_builtin("I.beta-petals")
    comp = _CompiledFamily(case.family)
    rng = np.random.default_rng(7)
    for _ in range(10):
        p, q = rng.uniform(0.1, 0.45, size=2)
        params = {"p": p, "q": q, "m": 1.0, "r": 1.0 - p - q}
        vec = np.array([params[s] for s in comp.symbols])
        fast = comp.value(vec, tol=1e-12, scan_points=20_000)
        slow = objective(case.family, params)
        assert abs(fast - slow) < 1e-8 * max(1.0, slow)


def test_builtin_case_ids():
    ids = {c.id for c in builtin_cases()}
    assert "I.deltan" in ids
    assert "II.gamma-not-petal-curve" in ids
    assert "I.two-bridges" in ids
    assert get_builtin("II.gamma-not-petal-curve").expected_bound == 33.0
    with pytest.raises(KeyError):
        get_builtin("nope")


def test_strict_flag():
    assert get_builtin("I.half-n").strict
    assert get_builtin("III.mu-filaments-beta").strict
    assert not get_builtin("IV.nu-meet-gamma-both-beta").strict
    assert not get_builtin("V.both-non-petal").strict


# ---------------------------------------------------------------------------
# case files


CASE_TOML = textwrap.dedent(
    """
    id = "custom.half"
    section = "custom"
    expected_bound = 16.0
    anchor = "two short disjoint generators"

    [family]
    edges = []

    [[family.groups]]
    name = "u1"
    symbol = "u1"
    count = 1

    [[family.groups]]
    name = "u2"
    symbol = "u2"
    count = 1

    [[constraints]]
    coeffs = {u1 = 1.0, u2 = 1.0}
    bound = 0.5
    label = "u1+u2 <= n/2"

    [[reductions]]
    symbol = "u2"
    const = 0.5
    coeffs = {u1 = -1.0}

    [expected_argmin]
    u1 = 0.25
    """
)


def test_load_case_toml(tmp_path):
    path = tmp_path / "case.toml"
    path.write_text(CASE_TOML)
    case = load_case_toml(str(path))
    assert case.id == "custom.half"
    res = minimize_case(case, check_reductions=False)
    assert abs(res.min_value - 16.0) < 1e-6
    assert res.meets_bound


def test_load_case_toml_errors(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text("id = \n")
    with pytest.raises(ValueError):
        load_case_toml(str(path))
    path.write_text("id = 'x'\n")
    with pytest.raises(ValueError, match="missing key"):
        load_case_toml(str(path))


def test_case_from_dict_minimal():
    case = case_from_dict(
        {
            "id": "t",
            "expected_bound": 2.0,
            "family": {"groups": [{"name": "a", "count": 2}]},
            "constraints": [{"coeffs": {"a": 1.0}, "bound": 1.0}],
        }
    )
    assert case.family.groups[0].symbol == "a"
    res = minimize_case(case, grid=16, check_reductions=False)
    # two weight-1 free generators: growth 2
    assert abs(res.min_value - 2.0) < 1e-6
