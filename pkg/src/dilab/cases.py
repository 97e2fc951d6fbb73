"""Bundled minimization cases.

Each entry encodes one step of the six-part case analysis behind the
strand-count bounds: a graph family read off the accompanying diagram, the
inequality list, the monotonicity/symmetry equality reductions stated with
the computation ("the minimum is attained when ..."), the claimed bound,
and the approximate location of the minimum when one is quoted.  Case ids
are prefixed by the case number (I..VI).

Families with no accompanying diagram (cases IV and V below) are
reconstructed from the prose description of which curves intersect; these
carry ``prose_reconstructed=True`` and are excluded from the strict bound
suite.  Notes record the reconstruction assumptions and two places where an
inequality was stated with a stray != sign (read here as <=).

Two diagrams disagree with the polynomial given alongside them; the
families below follow the polynomials, which are what the bounds were
computed from:

* in the configuration where the two short curves intersect, the diagram
  shows a p-q join that the polynomial 1 - 4x^(1/2) - x does not have;
* in the same-filament-cycle configuration, the diagram swaps the roles of
  the two filament sums relative to the factored polynomial; only the
  latter reaches 68 (at a = 0.33, as quoted).

In the terminal configuration (the integer search and its 27 / 17.8
relatives), the bridge curves meet both short curves, so the u group is
joined to nothing: with u-p and u-q joins the value at the parity-rule
integer point would not equal the parity-split root, while without them it
does, exactly.
"""

from __future__ import annotations

import math

from .casework import CaseSpec, Constraint, GraphFamily, Group, Reduction

__all__ = ["BUILTIN_CASES"]

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT5 = math.sqrt(5.0)

# smallest positive root s of s**4 - s**2 - 4s + 1 gives the two-bridge
# configuration value 1/s**2 (frozen from a high-precision solve)
TWO_BRIDGE_VALUE = 17.837928370575441


def _case(
    case_id: str,
    section: str,
    groups,
    edges,
    constraints,
    reductions,
    bound: float,
    argmin=None,
    anchor: str = "",
    prose: bool = False,
    notes: str = "",
    integer_n=None,
    reduction_check: bool = True,
) -> CaseSpec:
    return CaseSpec(
        id=case_id,
        section=section,
        family=GraphFamily(
            tuple(Group(*g) for g in groups), tuple(tuple(e) for e in edges)
        ),
        constraints=tuple(
            Constraint.of(c, b, label) for c, b, label in constraints
        ),
        reductions=tuple(
            Reduction.of(sym, const, coeffs, anchor=a)
            for sym, const, coeffs, a in reductions
        ),
        expected_bound=bound,
        expected_argmin=argmin,
        anchor=anchor,
        prose_reconstructed=prose,
        notes=notes,
        integer_n=integer_n,
        reduction_check=reduction_check,
    )


BUILTIN_CASES: tuple[CaseSpec, ...] = (
    # -- case I -------------------------------------------------------------
    _case(
        "I.half-n",
        "I",
        [("u1", "u1", 1), ("u2", "u2", 1)],
        [],
        [({"u1": 1, "u2": 1}, 0.5, "u1+u2 <= n/2")],
        [("u2", 0.5, {"u1": -1}, "budget tight at the minimum")],
        16.0,
        argmin={"u1": 0.25, "u2": 0.25},
        anchor="two intersecting curves inside a cycle of length <= n/2",
    ),
    _case(
        "I.leq2curves",
        "I",
        [("u1", "u1", 1), ("u2", "u2", 1), ("u3", "u3", 1)],
        [("u1", "u3")],
        [({"u1": 1, "u2": 1, "u3": 1}, 1.0, "u1+u2+u3 <= n")],
        [
            ("u3", 0.0, {"u1": 1}, "symmetric endpoints"),
            ("u2", 1.0, {"u1": -2}, "budget tight at the minimum"),
        ],
        16.0,
        argmin={"u1": 0.25, "u2": 0.5, "u3": 0.25},
        anchor="three curves in a chain inside a cycle of length <= n",
    ),
    _case(
        "I.enter-filament-twice",
        "I",
        [("p", "p", 4), ("m", "m", 1), ("q", "q", 2)],
        [("p", "q")],
        [({"m": 1}, 1.0, "m <= n"), ({"p": 1, "q": 1}, 1.0, "p+q <= n")],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("q", 1.0, {"p": -1}, "budget tight at the minimum"),
        ],
        9.0 + 4.0 * _SQRT2,
        argmin={"p": 0.63},
        anchor="a short curve entering the filament cycles twice",
    ),
    _case(
        "I.enter-filament-twice-same",
        "I",
        [("p", "p", 4), ("m", "m", 1)],
        [],
        [({"m": 1}, 1.0, "m <= n"), ({"p": 2}, 1.0, "2p <= n")],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("p", 0.5, None, "minimum attained at p = n/2"),
        ],
        9.0 + 4.0 * _SQRT5,
        argmin={"p": 0.5, "m": 1.0},
        anchor="quadruple of doubles when the two short curves coincide",
    ),
    _case(
        "I.beta-gamma-intersect",
        "I",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 2)],
        [],
        [({"m": 1}, 1.0, "m <= n"), ({"p": 1, "q": 1}, 1.0, "p+q <= n")],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("q", 1.0, {"p": -1}, "budget tight; p = q by symmetry"),
        ],
        9.0 + 4.0 * _SQRT5,
        argmin={"p": 0.5, "q": 0.5},
        anchor="the two short curves intersect (diagram's p-q join dropped; "
        "see module docstring)",
    ),
    _case(
        "I.beta-petals",
        "I",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 2), ("r", "r", 1)],
        [("p", "q"), ("m", "r"), ("q", "r")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1, "r": 1}, 1.0, "p+q+r <= n"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("r", 1.0, {"p": -1, "q": -1}, "budget tight at the minimum"),
        ],
        25.0,
        argmin={"p": 0.5, "q": 0.28},
        anchor="a short curve running through petals",
    ),
    _case(
        "I.mu-filaments-petals-both",
        "I",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 2), ("r", "r", 1),
         ("u", "u", 2)],
        [("p", "q"), ("m", "r"), ("p", "r"), ("q", "r")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1, "r": 1}, 1.0, "p+q+r <= n"),
            ({"u": 1, "r": -1}, 1.0, "u <= n + r"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("q", 0.0, {"p": 1}, "p = q by symmetry"),
            ("r", 1.0, {"p": -2}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -2}, "u at its cap n + r"),
        ],
        20.0,
        argmin={"p": 0.40},
        anchor="connector between filament and petal cycles, meeting both "
        "short curves",
    ),
    _case(
        "I.mu-filaments-petals-beta",
        "I",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 2), ("r", "r", 1),
         ("u", "u", 2)],
        [("p", "q"), ("m", "r"), ("p", "r"), ("q", "r"), ("q", "u")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1, "r": 1}, 1.0, "p+q+r <= n"),
            ({"q": 1, "u": 1, "r": -1}, 1.0, "q + u <= n + r"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("r", 1.0, {"p": -1, "q": -1}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -1, "q": -2}, "u at its cap n + r - q"),
        ],
        13.0 + 4.0 * _SQRT3,
        argmin={"p": 0.45, "q": 0.32},
        anchor="connector meeting one short curve only",
    ),
    _case(
        "I.mu-filaments-petals-neither",
        "I",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 2), ("r", "r", 1),
         ("u", "u", 2)],
        [("p", "q"), ("m", "r"), ("p", "r"), ("q", "r"), ("p", "u"),
         ("q", "u")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1, "r": 1}, 1.0, "p+q+r <= n"),
            ({"p": 1, "q": 1, "u": 1, "r": -1}, 1.0, "p + q + u <= n + r"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("q", 0.0, {"p": 1}, "p = q by symmetry"),
            ("r", 1.0, {"p": -2}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -4}, "u at its cap n + r - p - q"),
        ],
        21.0,
        argmin={"p": 0.34},
        anchor="connector disjoint from both short curves",
    ),
    _case(
        "I.distinct-filament-curves",
        "I",
        [("p", "p", 2), ("m1", "m1", 1), ("m2", "m2", 1), ("q", "q", 2),
         ("u", "u", 4)],
        [("p", "q"), ("p", "m2"), ("m1", "m2"), ("m1", "q"), ("u", "p"),
         ("u", "q")],
        [
            ({"m1": 1, "m2": 1}, 1.0, "m1+m2 <= n"),
            ({"p": 1, "q": 1}, 1.0, "p+q <= n"),
            ({"u": 1}, 1.0, "u <= n"),
        ],
        [
            ("m1", 0.5, None, "minimum attained at m1 = m2 = n/2"),
            ("m2", 0.5, None, "minimum attained at m1 = m2 = n/2"),
            ("p", 0.5, None, "minimum attained at p = q = n/2"),
            ("q", 0.5, None, "minimum attained at p = q = n/2"),
            ("u", 1.0, None, "minimum attained at u = n"),
        ],
        16.0,
        argmin={"m1": 0.5, "m2": 0.5, "p": 0.5, "q": 0.5, "u": 1.0},
        anchor="short curves on two different filament cycles",
    ),
    _case(
        "I.same-filament-other-curves",
        "I",
        [("p", "p", 2), ("m1", "m1", 1), ("m2", "m2", 1), ("q", "q", 2),
         ("u", "u", 4)],
        [("p", "q"), ("p", "m1"), ("m1", "q"), ("m1", "m2"), ("u", "p"),
         ("u", "q")],
        [
            ({"m1": 1, "m2": 1}, 1.0, "m1+m2 <= n"),
            ({"p": 1, "q": 1, "m1": -1}, 0.0, "p+q <= m1"),
            ({"u": 1}, 1.0, "u <= n"),
        ],
        [
            ("m2", 1.0, {"m1": -1}, "minimum attained at m2 = n - m1"),
            ("p", 0.0, {"m1": 0.5}, "minimum attained at p = q = m1/2"),
            ("q", 0.0, {"m1": 0.5}, "minimum attained at p = q = m1/2"),
            ("u", 1.0, None, "minimum attained at u = n"),
        ],
        68.0,
        argmin={"m1": 0.66},
        anchor="both short curves on one filament cycle, others exist "
        "(edges follow the printed polynomial, not the diagram; see module "
        "docstring)",
    ),
    _case(
        "I.non-reciprocal",
        "I",
        [("p", "p", 2), ("q", "q", 2), ("m", "m", 1)],
        [("p", "q")],
        [({"m": 1}, 1.0, "m <= n")],
        [
            ("m", 1.0, None, "m = n (the bound goes through lambda**m)"),
            ("p", 1.0 / 3.0, None, "palindromic coefficients force p = m/3"),
            ("q", 1.0 / 3.0, None, "palindromic coefficients force q = m/3"),
        ],
        9.0 + 4.0 * _SQRT5,
        argmin={"p": 1.0 / 3.0, "q": 1.0 / 3.0, "m": 1.0},
        anchor="no fifth edge: palindromicity pins the exponents",
        notes="the equalities here are an algebraic side condition, not "
        "monotone reductions, so the unreduced comparison is off",
        reduction_check=False,
    ),
    _case(
        "I.mu-disjoint-beta-gamma",
        "I",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 2), ("u", "u", 2)],
        [("p", "q"), ("u", "p"), ("u", "q")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1, "u": 1}, 1.0, "p+q+u <= n"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("q", 0.0, {"p": 1}, "p = q by symmetry"),
            ("u", 1.0, {"p": -2}, "budget tight at the minimum"),
        ],
        27.0,
        argmin={"p": 1.0 / 3.0, "q": 1.0 / 3.0, "u": 1.0 / 3.0},
        anchor="third curve disjoint from both short curves",
    ),
    _case(
        "I.mu-disjoint-gamma",
        "I",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 2), ("u", "u", 2)],
        [("p", "q"), ("u", "q")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1}, 1.0, "p+q <= n"),
            ({"q": 1, "u": 1}, 1.0, "q+u <= n"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("p", 1.0, {"q": -1}, "budget tight at the minimum"),
            ("u", 1.0, {"q": -1}, "budget tight at the minimum"),
        ],
        9.0 + 4.0 * _SQRT2,
        argmin={"q": 0.37},
        anchor="third curve meeting one short curve only",
    ),
    _case(
        "I.two-bridges",
        "I",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 2),
         ("u1", "u", 1), ("u2", "u", 1), ("v1", "v", 1), ("v2", "v", 1)],
        [("p", "q"), ("u1", "v1")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1}, 1.0, "p+q <= n"),
            ({"u": 1}, 1.0, "u <= n"),
            ({"v": 1}, 1.0, "v <= n"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("p", 0.5, None, "minimum attained at p = q = n/2"),
            ("q", 0.5, None, "minimum attained at p = q = n/2"),
            ("u", 1.0, None, "minimum attained at u = v = n"),
            ("v", 1.0, None, "minimum attained at u = v = n"),
        ],
        TWO_BRIDGE_VALUE,
        argmin={"p": 0.5, "q": 0.5, "u": 1.0, "v": 1.0, "m": 1.0},
        anchor="two bridge curves that are not doubles of one another",
        notes="one disjoint pair among the bridge curves, matching the "
        "polynomial (1-2x^(1/2))^2 - 5x + x^2",
    ),
    _case(
        "I.deltan",
        "I",
        [("p", "p", 2), ("q", "q", 2), ("u", "u", 2), ("m", "m", 1)],
        [("p", "q")],
        [({"p": 1, "q": 1, "m": -1}, 0.0, "p+q <= m"),
         ({"u": 1, "m": -1}, 0.0, "u <= m")],
        [],
        14.5,
        argmin=None,
        anchor="terminal configuration; integer lengths with palindromic "
        "reciprocal and a unique top root",
        notes="bound is min(14.5, (parity root)**n); solved by the integer "
        "search, not the grid",
        integer_n=9,
    ),
    # -- case II ------------------------------------------------------------
    _case(
        "II.beta-gamma-intersect",
        "II",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 1)],
        [("q", "m")],
        [({"m": 1}, 1.0, "m <= n"), ({"p": 1, "q": 2}, 1.0, "p+2q <= n")],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("p", 1.0, {"q": -2}, "budget tight at the minimum"),
        ],
        14.5,
        argmin={"p": 0.70, "q": 0.15},
        anchor="mixed curve meets the petal-only curve",
    ),
    _case(
        "II.gamma-not-petal-curve",
        "II",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 1), ("r", "r", 1)],
        [("p", "q"), ("m", "q"), ("m", "r")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1, "r": 1}, 1.0, "p+q+r <= n"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("r", 1.0, {"p": -1, "q": -1}, "budget tight at the minimum"),
        ],
        33.0,
        argmin={"p": 0.41, "q": 0.20, "r": 0.39},
        anchor="the petal-only curve is not itself a petal cycle",
    ),
    _case(
        "II.mu-no-filaments",
        "II",
        [("p", "p", 2), ("q", "q", 1), ("u", "u", 1), ("s", "s", 1)],
        [("p", "q"), ("u", "p"), ("s", "q")],
        [
            ({"p": 1, "q": 2, "s": 1}, 1.0, "p+2q+s <= n"),
            ({"u": 1, "q": -1, "s": -1}, 0.0, "u <= q+s"),
        ],
        [
            ("s", 1.0, {"p": -1, "q": -2}, "budget tight at the minimum"),
            ("u", 1.0, {"p": -1, "q": -1}, "u at its cap q + s"),
        ],
        32.0,
        argmin={"p": 0.32, "q": 0.08, "s": 0.52},
        anchor="connector avoiding the filaments",
    ),
    _case(
        "II.mu-filaments-beta-others",
        "II",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 1), ("u", "u", 2),
         ("s", "s", 1)],
        [("p", "q"), ("m", "q"), ("m", "s"), ("s", "q")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 2, "s": 1}, 1.0, "p+2q+s <= n"),
            ({"u": 1, "m": -1, "q": -1, "s": -1}, 0.0, "u <= m+q+s"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("s", 1.0, {"p": -1, "q": -2}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -1, "q": -1}, "u at its cap m + q + s"),
        ],
        18.9,
        argmin={"p": 0.49, "q": 0.06, "s": 0.39},
        anchor="connector through filaments meeting the mixed curve and the "
        "other petal cycles",
    ),
    _case(
        "II.mu-others-not-beta",
        "II",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 1), ("u", "u", 2),
         ("s", "s", 1)],
        [("p", "q"), ("m", "q"), ("m", "s"), ("s", "q"), ("u", "p")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 2, "s": 1}, 1.0, "p+2q+s <= n"),
            ({"p": 1, "u": 1, "m": -1, "q": -1, "s": -1}, 0.0,
             "p+u <= m+q+s"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("s", 1.0, {"p": -1, "q": -2}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -2, "q": -1}, "u at its cap m + q + s - p"),
        ],
        21.0,
        argmin={"p": 0.38, "q": 0.06, "s": 0.50},
        anchor="connector meeting other petal cycles but not the mixed curve",
    ),
    _case(
        "II.mu-only-gamma",
        "II",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 1), ("u", "u", 2),
         ("s", "s", 1)],
        [("p", "q"), ("m", "q"), ("m", "s"), ("u", "s"), ("u", "p"),
         ("s", "q")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 2, "s": 1}, 1.0, "p+2q+s <= n"),
            ({"u": 1, "m": -1, "q": -1}, 0.0, "s+u <= m+q+s"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("s", 1.0, {"p": -1, "q": -2}, "budget tight at the minimum"),
            ("u", 1.0, {"q": 1}, "u at its cap m + q"),
        ],
        14.5,
        argmin={"p": 0.59, "q": 0.07, "s": 0.27},
        anchor="connector meeting no petal cycle except the short one",
    ),
    # -- case III -----------------------------------------------------------
    _case(
        "III.gamma-two-petal-curves",
        "III",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 1), ("s", "s", 1),
         ("t", "t", 1)],
        [("p", "q"), ("m", "q"), ("m", "t"), ("p", "t"), ("s", "t"),
         ("s", "p"), ("s", "m")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1, "s": 1, "t": 1}, 1.0, "p+q+s+t <= n"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("s", 0.5, {"p": -0.5, "q": -0.5}, "s = t by symmetry, budget "
             "tight"),
            ("t", 0.5, {"p": -0.5, "q": -0.5}, "s = t by symmetry, budget "
             "tight"),
        ],
        33.0,
        argmin={"p": 0.21, "q": 0.40, "s": 0.20, "t": 0.20},
        anchor="petal-only curve crossing two petal cycles",
    ),
    _case(
        "III.mu-no-filaments",
        "III",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 1), ("u", "u", 1),
         ("r", "r", 1)],
        [("p", "q"), ("m", "q"), ("m", "r"), ("p", "r"), ("u", "p"),
         ("u", "m")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1, "r": 1}, 1.0, "p+q+r <= n"),
            ({"u": 1, "r": -1}, 0.0, "u <= r"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("r", 1.0, {"p": -1, "q": -1}, "budget tight at the minimum"),
            ("u", 1.0, {"p": -1, "q": -1}, "u at its cap r"),
        ],
        17.0,
        argmin={"p": 0.27, "q": 0.24, "r": 0.49},
        anchor="second exit curve avoiding the filaments",
    ),
    _case(
        "III.mu-filaments-beta",
        "III",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 1), ("u", "u", 2),
         ("r", "r", 1)],
        [("p", "q"), ("m", "q"), ("m", "r"), ("p", "r")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1, "r": 1}, 1.0, "p+q+r <= n"),
            ({"u": 1, "m": -1, "r": -1}, 0.0, "u <= m+r"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("r", 1.0, {"p": -1, "q": -1}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -1, "q": -1}, "u at its cap m + r"),
        ],
        17.0,
        argmin={"p": 0.37, "q": 0.24, "r": 0.39},
        anchor="second exit curve through filaments, meeting the "
        "filament-only curve",
    ),
    _case(
        "III.mu-filaments-not-beta",
        "III",
        [("p", "p", 2), ("m", "m", 1), ("q", "q", 1), ("u", "u", 2),
         ("r", "r", 1)],
        [("p", "q"), ("m", "q"), ("m", "r"), ("p", "r"), ("u", "p")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1, "r": 1}, 1.0, "p+q+r <= n"),
            ({"p": 1, "u": 1, "m": -1, "r": -1}, 0.0, "p+u <= m+r"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("r", 1.0, {"p": -1, "q": -1}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -2, "q": -1}, "u at its cap m + r - p"),
        ],
        14.8,
        argmin={"p": 0.33, "q": 0.26, "r": 0.41},
        anchor="second exit curve through filaments, missing the "
        "filament-only curve",
    ),
    # -- case IV (reconstructed families) ------------------------------------
    _case(
        "IV.nu-meet-gamma-both-beta",
        "IV",
        [("p", "p", 2), ("q", "q", 1), ("s", "s", 1), ("m", "m", 1),
         ("u", "u", 2), ("v", "v", 2)],
        [("p", "q"), ("p", "s"), ("q", "s"), ("m", "q"), ("m", "s")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 2, "s": 1}, 1.0, "p+2q+s <= n"),
            ({"u": 1, "q": -1, "s": -1}, 1.0, "u <= n+q+s"),
            ({"v": 1, "q": -1, "s": -1}, 1.0, "v <= n+q+s"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("s", 1.0, {"p": -1, "q": -2}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -1, "q": -1}, "u at its cap n + q + s"),
            ("v", 2.0, {"p": -1, "q": -1}, "v at its cap n + q + s"),
        ],
        17.4,
        argmin={"p": 0.43, "q": 0.12, "s": 0.33},
        prose=True,
        anchor="both exit curves meet the other petal cycles and the "
        "filament-only curve",
        notes="family reconstructed from the prose: exit curves and their "
        "doubles intersect everything they are said to meet",
    ),
    _case(
        "IV.nu-meet-gamma-mu-beta",
        "IV",
        [("p", "p", 2), ("q", "q", 1), ("s", "s", 1), ("m", "m", 1),
         ("u", "u", 2), ("v", "v", 2)],
        [("p", "q"), ("p", "s"), ("q", "s"), ("m", "q"), ("m", "s"),
         ("v", "p")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 2, "s": 1}, 1.0, "p+2q+s <= n"),
            ({"u": 1, "q": -1, "s": -1}, 1.0, "u <= n+q+s"),
            ({"p": 1, "v": 1, "q": -1, "s": -1}, 1.0, "p+v <= n+q+s"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("s", 1.0, {"p": -1, "q": -2}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -1, "q": -1}, "u at its cap"),
            ("v", 2.0, {"p": -2, "q": -1}, "v at its cap"),
        ],
        17.5,
        argmin={"p": 0.36, "q": 0.14, "s": 0.36},
        prose=True,
        anchor="one exit curve misses the filament-only curve",
        notes="reconstructed family",
    ),
    _case(
        "IV.nu-meet-gamma-neither-beta",
        "IV",
        [("p", "p", 2), ("q", "q", 1), ("s", "s", 1), ("m", "m", 1),
         ("u", "u", 2), ("v", "v", 2)],
        [("p", "q"), ("p", "s"), ("q", "s"), ("m", "q"), ("m", "s"),
         ("u", "p"), ("v", "p")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 2, "s": 1}, 1.0, "p+2q+s <= n"),
            ({"p": 1, "u": 1, "q": -1, "s": -1}, 1.0, "p+u <= n+q+s"),
            ({"p": 1, "v": 1, "q": -1, "s": -1}, 1.0, "p+v <= n+q+s"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("s", 1.0, {"p": -1, "q": -2}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -2, "q": -1}, "u at its cap"),
            ("v", 2.0, {"p": -2, "q": -1}, "v at its cap"),
        ],
        15.8,
        argmin={"p": 0.32, "q": 0.14, "s": 0.40},
        prose=True,
        anchor="both exit curves miss the filament-only curve",
        notes="reconstructed family",
    ),
    _case(
        "IV.nu-miss-gamma-both-beta",
        "IV",
        [("p", "p", 2), ("q", "q", 1), ("s", "s", 1), ("m", "m", 1),
         ("u", "u", 2), ("v", "v", 2)],
        [("p", "q"), ("p", "s"), ("q", "s"), ("m", "q"), ("m", "s"),
         ("v", "s")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 2, "s": 1}, 1.0, "p+2q+s <= n"),
            ({"u": 1, "q": -1, "s": -1}, 1.0, "u <= n+q+s"),
            ({"v": 1, "q": -1}, 1.0, "v <= n+q"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("s", 1.0, {"p": -1, "q": -2}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -1, "q": -1}, "u at its cap"),
            ("v", 1.0, {"q": 1}, "v at its cap n + q"),
        ],
        17.6,
        argmin={"p": 0.46, "q": 0.17, "s": 0.20},
        prose=True,
        anchor="one exit curve avoids the other petal cycles",
        notes="reconstructed family",
    ),
    _case(
        "IV.nu-miss-gamma-mu-beta",
        "IV",
        [("p", "p", 2), ("q", "q", 1), ("s", "s", 1), ("m", "m", 1),
         ("u", "u", 2), ("v", "v", 2)],
        [("p", "q"), ("p", "s"), ("q", "s"), ("m", "q"), ("m", "s"),
         ("v", "s"), ("v", "p")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 2, "s": 1}, 1.0, "p+2q+s <= n"),
            ({"u": 1, "q": -1, "s": -1}, 1.0, "u <= n+q+s"),
            ({"p": 1, "v": 1, "q": -1}, 1.0, "p+v <= n+q"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("s", 1.0, {"p": -1, "q": -2}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -1, "q": -1}, "u at its cap"),
            ("v", 1.0, {"p": -1, "q": 1}, "v at its cap n + q - p"),
        ],
        18.6,
        argmin={"p": 0.37, "q": 0.21, "s": 0.21},
        prose=True,
        anchor="the petal-avoiding exit curve also misses the filament-only "
        "curve",
        notes="reconstructed family",
    ),
    _case(
        "IV.nu-miss-gamma-nu-beta",
        "IV",
        [("p", "p", 2), ("q", "q", 1), ("s", "s", 1), ("m", "m", 1),
         ("u", "u", 2), ("v", "v", 2)],
        [("p", "q"), ("p", "s"), ("q", "s"), ("m", "q"), ("m", "s"),
         ("u", "p"), ("v", "s")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 2, "s": 1}, 1.0, "p+2q+s <= n"),
            ({"p": 1, "u": 1, "q": -1, "s": -1}, 1.0, "p+u <= n+q+s"),
            ({"v": 1, "q": -1}, 1.0, "v <= n+q"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("s", 1.0, {"p": -1, "q": -2}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -2, "q": -1}, "u at its cap"),
            ("v", 1.0, {"q": 1}, "v at its cap n + q"),
        ],
        18.5,
        argmin={"p": 0.36, "q": 0.21, "s": 0.22},
        prose=True,
        anchor="the other exit curve misses the filament-only curve",
        notes="reconstructed family; the bound on v is printed with a stray "
        "!= sign, read here as <=",
    ),
    _case(
        "IV.nu-miss-gamma-neither-beta",
        "IV",
        [("p", "p", 2), ("q", "q", 1), ("s", "s", 1), ("m", "m", 1),
         ("u", "u", 2), ("v", "v", 2)],
        [("p", "q"), ("p", "s"), ("q", "s"), ("m", "q"), ("m", "s"),
         ("u", "p"), ("v", "p"), ("v", "s")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 2, "s": 1}, 1.0, "p+2q+s <= n"),
            ({"p": 1, "u": 1, "q": -1, "s": -1}, 1.0, "p+u <= n+q+s"),
            ({"p": 1, "v": 1, "q": -1}, 1.0, "p+v <= n+q"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("s", 1.0, {"p": -1, "q": -2}, "budget tight at the minimum"),
            ("u", 2.0, {"p": -2, "q": -1}, "u at its cap"),
            ("v", 1.0, {"p": -1, "q": 1}, "v at its cap n + q - p"),
        ],
        16.8,
        argmin={"p": 0.32, "q": 0.23, "s": 0.22},
        prose=True,
        anchor="both exit curves miss the filament-only curve, one avoids "
        "the other petal cycles",
        notes="reconstructed family; the bound on v is printed with a stray "
        "!= sign, read here as <=",
    ),
    _case(
        "IV.distinct-filament-collections",
        "IV",
        [("p", "p", 2), ("q", "q", 1), ("m1", "m1", 1), ("m2", "m2", 1),
         ("u", "u", 2), ("v", "v", 2)],
        [("p", "q"), ("p", "m2"), ("m1", "m2"), ("m1", "q"), ("m2", "q"),
         ("u", "m2"), ("v", "m1"), ("v", "p")],
        [
            ({"m1": 1, "m2": 1}, 1.0, "m1+m2 <= n"),
            ({"p": 1, "q": 2}, 1.0, "p+2q <= n"),
            ({"u": 1, "m1": -1, "q": -1}, 0.0, "u <= m1+q"),
            ({"v": 1, "m2": -1, "q": -1}, 0.0, "v <= m2+q"),
        ],
        [
            ("m2", 1.0, {"m1": -1}, "budget tight at the minimum"),
            ("p", 1.0, {"q": -2}, "budget tight at the minimum"),
            ("u", 0.0, {"m1": 1, "q": 1}, "u at its cap m1 + q"),
            ("v", 1.0, {"m1": -1, "q": 1}, "v at its cap m2 + q"),
        ],
        19.5,
        argmin=None,
        prose=True,
        anchor="the two exit curves use disjoint collections of filament "
        "cycles",
        notes="reconstructed family; no edge/multiplicity variant of this "
        "shape reproduces the quoted minimum location, so this encoding is "
        "conservative (fewer disjointness assumptions, min ~25.8 > 19.5) "
        "and the quoted location is not asserted",
    ),
    # -- case V --------------------------------------------------------------
    _case(
        "V.a-final-both-singular",
        "V",
        [("m", "m", 1), ("p", "p", 1), ("q", "q", 1), ("pp", "pp", 2),
         ("qq", "qq", 2)],
        [("m", "p"), ("m", "q"), ("pp", "qq"), ("pp", "q"), ("qq", "q")],
        [
            ({"m": 1}, 1.0, "m <= n"),
            ({"p": 1, "q": 1, "pp": 1 / 3, "qq": 1 / 3}, 1.0,
             "p + q + p'/3 + q'/3 <= n"),
        ],
        [
            ("m", 1.0, None, "minimum attained at m = n"),
            ("qq", 0.0, {"pp": 1}, "p' = q' by symmetry"),
            ("q", 1.0, {"p": -1, "pp": -2.0 / 3.0},
             "budget tight at the minimum"),
        ],
        29.0,
        argmin={"p": 0.37, "q": 0.21, "pp": 0.63, "qq": 0.63},
        prose=True,
        anchor="one petal cycle; both induced singular curves run through "
        "filaments and petals",
        notes="reconstructed family (the two induced curves and their "
        "doubles are disjoint from the short petal-only curve and from "
        "each other, and meet the petal cycle and the filaments)",
    ),
    _case(
        "V.both-non-petal",
        "V",
        [("p", "p", 1), ("q", "q", 1), ("r", "r", 1)],
        [("p", "q")],
        [({"p": 1, "q": 1, "r": 1}, 1.0, "p+q+r <= n")],
        [("r", 1.0, {"p": -1, "q": -1}, "budget tight at the minimum")],
        16.0,
        argmin={"p": 0.25, "q": 0.25, "r": 0.5},
        anchor="both short curves run through petals and are not petal "
        "cycles",
    ),
)
