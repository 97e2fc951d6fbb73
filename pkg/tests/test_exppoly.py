import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dilab.exppoly import (
    ExpPoly,
    IntPoly,
    NoPositiveRootError,
    largest_positive_root,
    reciprocal,
    smallest_positive_root,
)

GOLDEN_SQ = (3.0 + math.sqrt(5.0)) / 2.0  # largest root of x^3-2x^2-2x+1


def P(*pairs):
    return ExpPoly.from_terms(pairs)


# ---------------------------------------------------------------------------
# evaluation


def test_eval_linear_root():
    assert P((1, 0), (-2, 1)).eval(0.5) == 0.0


def test_eval_quarter_exponent_root():
    # 1 - 2x^(1/4) vanishes at 1/16
    assert abs(P((1, 0), (-2, 0.25)).eval(1.0 / 16.0)) < 1e-15


def test_eval_double_root():
    assert P((1, 0), (-2, 1), (1, 2)).eval(1.0) == 0.0


def test_eval_at_zero_gives_constant_term():
    assert P((3, 0), (5, 2)).eval(0.0) == 3.0
    assert P((5, 2)).eval(0.0) == 0.0


def test_eval_negative_base():
    with pytest.raises(ValueError):
        P((1, 0.5),).eval(-1.0)
    # integer exponents are fine with a negative base
    assert P((1, 0), (1, 2)).eval(-2.0) == 5.0


def test_from_terms_merges_and_drops_zero():
    p = P((1, 0), (2, 1), (-2, 1), (1, 0.5))
    assert p.terms == ((1.0, 0.0), (1.0, 0.5))
    with pytest.raises(ValueError):
        P((1, -0.5))


# ---------------------------------------------------------------------------
# smallest positive root


def test_smallest_root_linear():
    assert abs(smallest_positive_root(P((1, 0), (-2, 1))) - 0.5) < 1e-12


def test_smallest_root_quarter():
    r = smallest_positive_root(P((1, 0), (-2, 0.25)))
    assert abs(r - 1.0 / 16.0) < 1e-12
    assert abs(1.0 / r - 16.0) < 1e-9


def test_smallest_root_tangential():
    # (1-x)^2 has a double root at 1: no sign change anywhere
    r = smallest_positive_root(P((1, 0), (-2, 1), (1, 2)))
    assert abs(r - 1.0) < 1e-6


def test_smallest_root_nonreciprocal_case():
    # 1 - 4x^(1/3) + 4x^(2/3) - x: reciprocal of the root is 9 + 4*sqrt(5)
    p = P((1, 0), (-4, 1 / 3), (4, 2 / 3), (-1, 1))
    r = smallest_positive_root(p)
    assert abs(1.0 / r - (9.0 + 4.0 * math.sqrt(5.0))) < 1e-8


def test_smallest_root_none_when_positive():
    assert smallest_positive_root(P((1, 0), (1, 1))) is None


def test_smallest_root_zero_poly():
    with pytest.raises(ValueError):
        smallest_positive_root(ExpPoly(()))


def test_smallest_root_close_pair_between_mesh_points():
    # roots at 0.4000 and 0.4002: far narrower than the coarse mesh step
    r0, r1 = 0.4, 0.4002
    q = [(1.0, 0.0), (0.5, 0.5)]  # positive on (0, 1]
    terms = []
    for c, e in q:
        terms += [
            (c, e),
            (-c * (1 / r0 + 1 / r1), e + 1),
            (c / (r0 * r1), e + 2),
        ]
    r = smallest_positive_root(ExpPoly.from_terms(terms), scan_points=500)
    assert r is not None and abs(r - r0) < 1e-10


@settings(max_examples=60, deadline=None)
@given(
    st.floats(min_value=0.05, max_value=0.95),
    st.lists(
        st.tuples(
            st.floats(min_value=0.5, max_value=4.0),
            st.floats(min_value=0.0, max_value=3.0),
        ),
        min_size=1,
        max_size=6,
    ),
)
def test_smallest_root_planted(r, qterms):
    # p = (1 - x/r) * q(x) with q > 0 on (0, r]: the plant is the first root
    terms = []
    for c, e in qterms:
        terms.append((c, e))
        terms.append((-c / r, e + 1.0))
    p = ExpPoly.from_terms(terms)
    found = smallest_positive_root(p, tol=1e-12)
    assert found is not None
    assert abs(found - r) <= 1e-10


# ---------------------------------------------------------------------------
# largest positive root


def test_largest_root_linear():
    assert abs(largest_positive_root(IntPoly.from_coeffs([-2, 1])) - 2.0) < 1e-12


def test_largest_root_three_strands():
    p = IntPoly.from_pairs([(3, 1), (2, -2), (1, -2), (0, 1)])
    assert abs(largest_positive_root(p) - GOLDEN_SQ) < 1e-10


def test_largest_root_eight_strands():
    p = IntPoly.from_pairs([(8, 1), (5, -2), (3, -2), (0, 1)])
    assert abs(largest_positive_root(p) - 1.41345) < 5e-6


def test_largest_root_no_positive():
    with pytest.raises(NoPositiveRootError):
        largest_positive_root(IntPoly.from_coeffs([1, 0, 1]))  # x^2 + 1


def test_largest_root_residual_small():
    # |p(r)| should be within 10*tol*|p'(r)|
    tol = 1e-12
    for pairs in ([(3, 1), (2, -2), (1, -2), (0, 1)],
                  [(8, 1), (5, -2), (3, -2), (0, 1)],
                  [(1, 1), (0, -2)]):
        p = IntPoly.from_pairs(pairs)
        r = largest_positive_root(p, tol=tol)
        dp = IntPoly.from_coeffs(
            [i * c for i, c in enumerate(p.coeffs)][1:]
        )
        assert abs(p.eval(r)) <= 10 * tol * abs(dp.eval(r)) + 1e-300


def test_largest_root_sparse_high_degree():
    # degree-2001 evaluation must not overflow
    p = IntPoly.from_pairs([(2001, 1), (1001, -2), (1000, -2), (0, 1)])
    r = largest_positive_root(p)
    assert 1.0 < r < 1.01


# ---------------------------------------------------------------------------
# reciprocal


def test_reciprocal_examples():
    one_minus_2t = IntPoly.from_coeffs([1, -2])
    assert reciprocal(one_minus_2t, 1).coeffs == (-2, 1)
    assert reciprocal(one_minus_2t, 2).coeffs == (0, -2, 1)
    p = IntPoly.from_pairs([(0, 1), (3, -4), (6, 4), (9, -1)])
    assert reciprocal(p, 9).coeffs == (-1, 0, 0, 4, 0, 0, -4, 0, 0, 1)


def test_reciprocal_degree_too_small():
    with pytest.raises(ValueError):
        reciprocal(IntPoly.from_coeffs([1, 0, 1]), 1)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=9))
def test_reciprocal_involution(coeffs):
    p = IntPoly.from_coeffs(coeffs)
    if p.is_zero:
        return
    d = p.degree
    assert reciprocal(reciprocal(p, d), d) == p


def test_intpoly_json_roundtrip():
    p = IntPoly.from_coeffs([1, 0, -2, 5])
    assert IntPoly.from_json(p.to_json()) == p


def test_exppoly_json_roundtrip():
    p = P((1, 0), (-2, 0.25), (3.5, 1.75))
    assert ExpPoly.from_json(p.to_json()) == p


def test_exppoly_as_intpoly():
    p = P((1, 0), (-2, 4), (1, 9))
    q = p.as_intpoly()
    assert q.coeffs == (1, 0, 0, 0, -2, 0, 0, 0, 0, 1)
    with pytest.raises(ValueError):
        P((1, 0.5)).as_intpoly()
