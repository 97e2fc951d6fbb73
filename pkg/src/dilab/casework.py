"""Constrained growth-rate minimization over parameterized graph families.

The objects here encode one minimization problem each: a graph family whose
vertex groups carry symbolic weights (``xN`` groups expand to N vertices of
the same weight, group-to-group edges expand to complete joins), a set of
linear constraints on the weights, and an expected lower bound.

All weights are normalized: a parameter value ``a`` stands for a weight
``a*n``, and the objective is the growth rate of the graph weighted by the
fractions themselves, which by the scaling law equals the n-th power of the
growth rate of the unnormalized graph.  This removes n from the continuous
problem entirely.

The minimizer is a coarse grid over the constraint polytope (after the
equality reductions declared on the case) followed by Nelder-Mead
refinement of the best seeds, with a few random restarts.  The objectives
are log-convex along weight lines, so multistart local search reliably
finds the bundled cases' minima; no certification is claimed.

The module also hosts the minimum-dilatation bookkeeping: the parity-split
polynomials whose largest roots give the lower bounds, the set of strand
counts where those roots are the answer, and the integer search over the
terminal configuration that realizes them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Mapping, Optional, Sequence

import numpy as np
from scipy.optimize import minimize as _scipy_minimize

from .exppoly import (
    IntPoly,
    largest_positive_root,
    reciprocal,
    smallest_positive_root,
    smallest_positive_root_terms,
)
from .wgraph import WeightedGraph, clique_polynomial, growth_rate

__all__ = [
    "Group",
    "GraphFamily",
    "Constraint",
    "Reduction",
    "CaseSpec",
    "MinimizeResult",
    "instantiate",
    "objective",
    "minimize_case",
    "underline_delta",
    "underline_delta_poly",
    "in_underline_N",
    "lower_bound",
    "accounting_constraints",
    "integer_search_deltan",
    "terminal_family",
    "durand_kerner",
    "case_from_dict",
    "load_case_toml",
    "builtin_cases",
    "get_builtin",
]

THRESHOLD = 14.5
ASYMPTOTIC_LIMIT = (2.0 + math.sqrt(3.0)) ** 2  # 13.9282...
BOUND_SLACK = 1e-3

# Weights below this are excluded from the search region: every printed
# minimum has coordinates above 0.05, while near-zero weights in a x2 group
# push the relevant root below anything a sampler can see.
MIN_WEIGHT = 5e-3
_NM_PENALTY = 1e4


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class Group:
    """``count`` vertices sharing one symbolic weight."""

    name: str
    symbol: str
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("group count must be >= 1")


@dataclass(frozen=True)
class GraphFamily:
    """Vertex groups with no intra-group edges and complete joins between
    the named group pairs."""

    groups: tuple[Group, ...]
    edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        names = [g.name for g in self.groups]
        if len(set(names)) != len(names):
            raise ValueError("duplicate group name")
        known = set(names)
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"intra-group edge on {a!r}")
            if a not in known or b not in known:
                raise ValueError(f"edge ({a!r}, {b!r}) names unknown group")

    def symbols(self) -> tuple[str, ...]:
        seen: list[str] = []
        for g in self.groups:
            if g.symbol not in seen:
                seen.append(g.symbol)
        return tuple(seen)

    def vertex_ids(self) -> dict[str, list[str]]:
        return {
            g.name: [f"{g.name}{i}" for i in range(1, g.count + 1)]
            for g in self.groups
        }


def _family(groups, edges=()) -> GraphFamily:
    gs = tuple(
        Group(*g) if not isinstance(g, Group) else g for g in groups
    )
    return GraphFamily(gs, tuple((a, b) for a, b in edges))


def instantiate(family: GraphFamily, params: Mapping[str, object]) -> WeightedGraph:
    """Expand the family at the given weights into a concrete graph."""
    for sym in family.symbols():
        if sym not in params:
            raise ValueError(f"unbound weight symbol {sym!r}")
        if not params[sym] > 0:
            raise ValueError(f"non-positive value for {sym!r}: {params[sym]!r}")
    ids = family.vertex_ids()
    weights = {}
    for g in family.groups:
        for vid in ids[g.name]:
            weights[vid] = params[g.symbol]
    edges = []
    for a, b in family.edges:
        edges.extend((u, v) for u in ids[a] for v in ids[b])
    return WeightedGraph.build(weights, edges)


def objective(family: GraphFamily, params: Mapping[str, object]) -> float:
    """Growth rate of the instantiated graph at normalized weights.

    With weights given as fractions of n this equals lambda**n for the
    unnormalized weights, by the scaling law.
    """
    return growth_rate(instantiate(family, params))


class _CompiledFamily:
    """Precomputed clique structure: one row of group counts per clique.

    Evaluating the clique polynomial at a parameter vector is then a matrix
    product, which keeps the optimizer's objective cheap.
    """

    def __init__(self, family: GraphFamily):
        self.family = family
        self.symbols = family.symbols()
        sym_index = {s: i for i, s in enumerate(self.symbols)}
        pattern = instantiate(family, {s: 1 for s in self.symbols})
        order = pattern.vertex_ids
        vert_sym = []
        name_of = {
            vid: g.symbol for g in family.groups
            for vid in family.vertex_ids()[g.name]
        }
        for vid in order:
            vert_sym.append(sym_index[name_of[vid]])

        rows: list[list[int]] = []
        signs: list[float] = []

        from .wgraph import _visit_cliques  # internal, shares the recursion

        def visit(mask: int, size: int) -> None:
            row = [0] * len(self.symbols)
            m = mask
            while m:
                low = m & -m
                m ^= low
                row[vert_sym[low.bit_length() - 1]] += 1
            rows.append(row)
            signs.append(-1.0 if size % 2 else 1.0)

        _visit_cliques(pattern, visit, max_vertices=60)
        self.counts = np.array(rows, dtype=float)
        self.signs = np.array(signs, dtype=float)

        # non-adjacent vertex pairs, recorded as symbol index pairs; any
        # such pair (u, v) certifies lambda**n >= 2**(1/max(w_u, w_v))
        pairs: set[tuple[int, int]] = set()
        joined = {frozenset(e) for e in family.edges}
        for g in family.groups:
            if g.count >= 2:
                i = sym_index[g.symbol]
                pairs.add((i, i))
        for a in family.groups:
            for b in family.groups:
                if a.name < b.name and frozenset((a.name, b.name)) not in joined:
                    i, j = sorted((sym_index[a.symbol], sym_index[b.symbol]))
                    pairs.add((i, j))
        self.pair_indices = tuple(pairs)

    def pair_bound(self, vec: np.ndarray) -> float:
        """Certified lower bound on the objective from non-adjacent pairs.

        Each non-adjacent pair (u, v) spans an induced two-generator free
        subsemigroup, so the objective is at least the reciprocal root of
        1 - t**w_u - t**w_v; the bound is the best such pair.  The root is
        found by bisection in log t (the function is monotone there).
        """
        best = 1.0
        for i, j in self.pair_indices:
            a, b = vec[i], vec[j]
            if a <= 0 or b <= 0:
                return math.inf
            lo = -1.4 / min(a, b)  # both terms <= 1/4 here
            hi = 0.0
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                if math.exp(a * mid) + math.exp(b * mid) < 1.0:
                    lo = mid
                else:
                    hi = mid
            best = max(best, math.exp(-0.5 * (lo + hi)))
        return best

    def value(
        self, vec: np.ndarray, tol: float = 1e-11, scan_points: int = 800
    ) -> float:
        """Objective value, guarded against invisible near-zero roots.

        The sampled root can only overshoot the true smallest root (a pair
        of roots below mesh resolution merges into an undetectable dip), so
        taking the max with the analytic pair bound keeps degenerate
        corners from masquerading as minima while leaving healthy points
        untouched (there the bound is below the true value).
        """
        exps = self.counts @ vec
        r = smallest_positive_root_terms(
            self.signs, exps, tol=tol, scan_bound=1.0 + 1e-6,
            scan_points=scan_points,
        )
        guard = self.pair_bound(vec)
        if r is None:
            if guard > 1.0:
                return guard
            raise ArithmeticError("no root in (0, 1] for the clique polynomial")
        return max(1.0 / r, guard)


# ---------------------------------------------------------------------------
# constraints, reductions, case specs


@dataclass(frozen=True)
class Constraint:
    """Linear inequality sum(coeffs[s] * value[s]) <= bound."""

    coeffs: tuple[tuple[str, float], ...]
    bound: float
    label: str = ""

    @staticmethod
    def of(coeffs: Mapping[str, float], bound: float, label: str = "") -> "Constraint":
        return Constraint(
            tuple(sorted((s, float(c)) for s, c in coeffs.items())),
            float(bound),
            label,
        )

    def violation(self, params: Mapping[str, float]) -> float:
        total = sum(c * params[s] for s, c in self.coeffs)
        return max(0.0, total - self.bound)


@dataclass(frozen=True)
class Reduction:
    """Declared equality: symbol = const + sum(coeffs[s] * value[s])."""

    symbol: str
    const: float
    coeffs: tuple[tuple[str, float], ...] = ()
    anchor: str = ""

    @staticmethod
    def of(symbol: str, const: float, coeffs: Optional[Mapping[str, float]] = None,
           anchor: str = "") -> "Reduction":
        return Reduction(
            symbol,
            float(const),
            tuple(sorted((s, float(c)) for s, c in (coeffs or {}).items())),
            anchor,
        )

    def value(self, free: Mapping[str, float]) -> float:
        return self.const + sum(c * free[s] for s, c in self.coeffs)


@dataclass(frozen=True)
class CaseSpec:
    """One minimization problem plus its expected outcome."""

    id: str
    section: str
    family: GraphFamily
    constraints: tuple[Constraint, ...]
    reductions: tuple[Reduction, ...]
    expected_bound: float
    expected_argmin: Optional[dict[str, float]]
    anchor: str
    prose_reconstructed: bool = False
    notes: str = ""
    integer_n: Optional[int] = None  # set only on the integer-search case
    # False when the declared equalities encode algebraic side conditions
    # rather than monotonicity, making an unreduced comparison meaningless
    reduction_check: bool = True

    def __post_init__(self):
        if self.expected_bound <= 1:
            raise ValueError("expected_bound must exceed 1")

    @property
    def strict(self) -> bool:
        """Part of the hard acceptance suite: a printed, non-reconstructed
        computation from the first three cases."""
        return self.section in ("I", "II", "III") and not self.prose_reconstructed

    def free_symbols(self) -> tuple[str, ...]:
        reduced = {r.symbol for r in self.reductions}
        return tuple(s for s in self.family.symbols() if s not in reduced)


@dataclass
class MinimizeResult:
    case_id: str
    min_value: float
    argmin: dict[str, float]
    meets_bound: bool
    expected_bound: float
    evaluations: int
    unreduced_min: Optional[float] = None
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "case": self.case_id,
            "min": self.min_value,
            "argmin": self.argmin,
            "expected_bound": self.expected_bound,
            "meets_bound": self.meets_bound,
            "evaluations": self.evaluations,
            "unreduced_min": self.unreduced_min,
            "notes": self.notes,
        }


# ---------------------------------------------------------------------------
# the minimizer


def _full_params(case: CaseSpec, free: Mapping[str, float]) -> dict[str, float]:
    params = dict(free)
    for r in case.reductions:
        params[r.symbol] = r.value(free)
    return params


def _feasibility(case: CaseSpec, params: Mapping[str, float]) -> float:
    """0.0 when feasible, otherwise the total violation."""
    v = sum(max(0.0, MIN_WEIGHT - params[s]) for s in case.family.symbols())
    v += sum(c.violation(params) for c in case.constraints)
    return v


def _free_box(case: CaseSpec) -> list[tuple[float, float]]:
    box = []
    for s in case.free_symbols():
        hi = 2.5
        for c in case.constraints:
            coeffs = dict(c.coeffs)
            if coeffs.get(s, 0.0) > 0 and c.bound > 0:
                hi = min(hi, c.bound / coeffs[s])
        box.append((MIN_WEIGHT, hi))
    return box


def minimize_case(
    case: CaseSpec,
    grid: int = 64,
    seed: int = 0,
    refine: bool = True,
    check_reductions: bool = True,
    top_seeds: int = 16,
    restarts: int = 3,
) -> MinimizeResult:
    """Minimize the case objective over its constraint polytope.

    Coarse grid over the free parameters (after declared reductions), then
    Nelder-Mead from the best seeds plus seeded random restarts.  The
    returned minimum is re-evaluated through the plain instantiate/growth
    route.  When ``check_reductions`` is set, a low-resolution grid without
    any reductions double-checks that the declared equalities do not hide a
    lower minimum (beyond 1e-3).
    """
    if case.integer_n is not None:
        return _minimize_integer_case(case)

    compiled = _CompiledFamily(case.family)
    free_syms = case.free_symbols()
    sym_order = compiled.symbols
    rng = np.random.default_rng(seed)
    evals = 0

    def fast_value(params: Mapping[str, float]) -> float:
        vec = np.array([params[s] for s in sym_order])
        return compiled.value(vec)

    def eval_free(x: Sequence[float]) -> tuple[float, Optional[dict]]:
        nonlocal evals
        free = dict(zip(free_syms, (float(v) for v in x)))
        params = _full_params(case, free)
        bad = _feasibility(case, params)
        if bad > 0.0:
            return _NM_PENALTY * (1.0 + bad), None
        evals += 1
        return fast_value(params), params

    d = len(free_syms)
    best: list[tuple[float, tuple[float, ...]]] = []
    if d == 0:
        value, params = eval_free(())
        if params is None:
            raise ValueError(f"case {case.id}: reduced point is infeasible")
        best = [(value, ())]
    else:
        box = _free_box(case)
        per_dim = grid
        while per_dim**d > 300_000:
            per_dim = max(4, per_dim // 2)
        axes = [np.linspace(lo, hi, per_dim) for lo, hi in box]
        for point in product(*axes):
            value, params = eval_free(point)
            if params is not None:
                best.append((value, tuple(point)))
        if not best:
            raise ValueError(f"case {case.id}: empty feasible region on the grid")
        best.sort(key=lambda t: (t[0], t[1]))

    candidates = [np.array(p) for _, p in best[:top_seeds]]
    if d > 0:
        for _ in range(restarts):
            for _ in range(200):
                x = np.array([rng.uniform(lo, hi) for lo, hi in box])
                free = dict(zip(free_syms, x.tolist()))
                if _feasibility(case, _full_params(case, free)) == 0.0:
                    candidates.append(x)
                    break

    best_val, best_x = best[0]
    if refine and d > 0:
        for x0 in candidates:
            res = _scipy_minimize(
                lambda x: eval_free(x)[0],
                x0,
                method="Nelder-Mead",
                options={
                    "xatol": 1e-8,
                    "fatol": 1e-11,
                    "maxfev": 400 * max(d, 1),
                },
            )
            v, params = eval_free(res.x)
            if params is not None and v < best_val:
                best_val, best_x = v, tuple(float(t) for t in res.x)

    argmin = _full_params(case, dict(zip(free_syms, best_x)))
    # report through the contract route (instantiate + growth_rate)
    reported = objective(case.family, argmin)
    notes = []
    if abs(reported - best_val) > 1e-7 * max(1.0, reported):
        notes.append(
            f"fast/contract objective mismatch: {best_val!r} vs {reported!r}"
        )

    unreduced = None
    if check_reductions and case.reductions and case.reduction_check:
        unreduced = _unreduced_scan(case, compiled)
        if unreduced < reported - BOUND_SLACK:
            notes.append(
                f"reduction check found lower value {unreduced:.6f}"
            )

    return MinimizeResult(
        case_id=case.id,
        min_value=reported,
        argmin={s: float(v) for s, v in argmin.items()},
        meets_bound=reported >= case.expected_bound - BOUND_SLACK,
        expected_bound=case.expected_bound,
        evaluations=evals,
        unreduced_min=unreduced,
        notes="; ".join(notes),
    )


def _unreduced_scan(case: CaseSpec, compiled: _CompiledFamily, budget: int = 6000) -> float:
    """Low-resolution scan with every symbol free (reductions ignored).

    The handful of best coarse points is re-evaluated at full scan
    resolution before reporting, so that mesh artifacts at extreme corners
    do not masquerade as counterexamples to the declared reductions.  This
    is a one-sided sanity signal, not a certified global minimum.
    """
    syms = compiled.symbols
    d = len(syms)
    per_dim = max(3, int(budget ** (1.0 / d)))
    axes = []
    for s in syms:
        hi = 2.5
        for c in case.constraints:
            coeffs = dict(c.coeffs)
            if coeffs.get(s, 0.0) > 0 and c.bound > 0:
                hi = min(hi, c.bound / coeffs[s])
        axes.append(np.linspace(MIN_WEIGHT, hi, per_dim))
    coarse: list[tuple[float, tuple[float, ...]]] = []
    for point in product(*axes):
        params = dict(zip(syms, point))
        if any(c.violation(params) > 0 for c in case.constraints):
            continue
        coarse.append((compiled.value(np.array(point), scan_points=400), point))
    if not coarse:
        return math.inf
    coarse.sort(key=lambda t: t[0])
    return min(
        compiled.value(np.array(point), tol=1e-12, scan_points=100_000)
        for _, point in coarse[:8]
    )


def _minimize_integer_case(case: CaseSpec) -> MinimizeResult:
    n = case.integer_n
    search = integer_search_deltan(n)
    value_n = search["value"] ** n
    bound = min(THRESHOLD, underline_delta(n) ** n)
    p, q = search["pq"]
    return MinimizeResult(
        case_id=case.id,
        min_value=value_n,
        argmin={"p": float(p), "q": float(q), "u": float(n), "m": float(n)},
        meets_bound=value_n >= bound - BOUND_SLACK,
        expected_bound=bound,
        evaluations=len(search["candidates"]),
        notes=f"integer search over (p, q), winner {search['pq']}",
    )


# ---------------------------------------------------------------------------
# minimum-dilatation bookkeeping


def underline_delta_poly(n: int) -> IntPoly:
    """The parity-split polynomial whose largest root is the n-strand bound."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if n % 2 == 1:
        k = (n - 1) // 2
        lows = (k + 1, k)
    elif n % 4 == 0:
        k = n // 4
        lows = (2 * k + 1, 2 * k - 1)
    else:
        k = (n - 2) // 4
        lows = (2 * k + 3, 2 * k - 1)
    return IntPoly.from_pairs([(n, 1), (lows[0], -2), (lows[1], -2), (0, 1)])


def underline_delta(n: int, tol: float = 1e-12) -> float:
    return largest_positive_root(underline_delta_poly(n), tol=tol)


def in_underline_N(n: int) -> bool:
    """Membership in the set of strand counts where the parity-root bound
    is the sharp one (the explicit union form)."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if n % 2 == 1:
        return n >= 9
    if n % 4 == 0:
        return n >= 16
    return n >= 30


def lower_bound(n: int) -> float:
    return min(THRESHOLD ** (1.0 / n), underline_delta(n))


_ACCOUNTING_SYMS = ("m", "p0", "q0", "r0", "p'", "q'")


def _check_kappa(value: float, name: str) -> float:
    if not -1.0 <= value <= 2.0:
        raise ValueError(f"{name} must lie in [-1, 2], got {value}")
    return float(value)


def accounting_constraints(
    kind: str,
    kappa: Optional[float] = None,
    kappa1: Optional[float] = None,
    kappa2: Optional[float] = None,
) -> tuple[Constraint, ...]:
    """Normalized singularity-accounting inequalities.

    ``basic``      m <= 1 and p0 + q0 + r0 <= 1
    ``1a``         p0 + q0 + p'/3 <= 1
    ``1b``         (kappa-1) p0 + q0 + r0 + (2-kappa)/3 p' <= 1
    ``2a``         p0 + q0 + p'/3 + q'/3 <= 1
    ``2b``         (kappa1-1) p0 + (kappa2-1) q0 + r0
                   + (2-kappa1)/3 p' + (2-kappa2)/3 q' <= 1
    """
    if kind == "basic":
        return (
            Constraint.of({"m": 1.0}, 1.0, "m <= n"),
            Constraint.of({"p0": 1.0, "q0": 1.0, "r0": 1.0}, 1.0,
                          "p0+q0+r0 <= n"),
        )
    if kind == "1a":
        return (
            Constraint.of({"p0": 1.0, "q0": 1.0, "p'": 1.0 / 3.0}, 1.0,
                          "p0+q0+p'/3 <= n"),
        )
    if kind == "1b":
        if kappa is None:
            raise ValueError("kind 1b needs kappa")
        k = _check_kappa(kappa, "kappa")
        return (
            Constraint.of(
                {"p0": k - 1.0, "q0": 1.0, "r0": 1.0, "p'": (2.0 - k) / 3.0},
                1.0,
                f"1b(kappa={k})",
            ),
        )
    if kind == "2a":
        return (
            Constraint.of(
                {"p0": 1.0, "q0": 1.0, "p'": 1.0 / 3.0, "q'": 1.0 / 3.0},
                1.0,
                "p0+q0+p'/3+q'/3 <= n",
            ),
        )
    if kind == "2b":
        if kappa1 is None or kappa2 is None:
            raise ValueError("kind 2b needs kappa1 and kappa2")
        k1 = _check_kappa(kappa1, "kappa1")
        k2 = _check_kappa(kappa2, "kappa2")
        return (
            Constraint.of(
                {
                    "p0": k1 - 1.0,
                    "q0": k2 - 1.0,
                    "r0": 1.0,
                    "p'": (2.0 - k1) / 3.0,
                    "q'": (2.0 - k2) / 3.0,
                },
                1.0,
                f"2b(kappa1={k1}, kappa2={k2})",
            ),
        )
    raise ValueError(f"unknown accounting kind {kind!r}")


# ---------------------------------------------------------------------------
# the integer search over the terminal configuration


def terminal_family() -> GraphFamily:
    """Two short curves and their doubles on one long cycle, plus the two
    bridge curves: the configuration whose integer minimizers realize the
    parity-split roots.  Only the short-curve pairs are disjoint."""
    return _family(
        [("p", "p", 2), ("q", "q", 2), ("u", "u", 2), ("m", "m", 1)],
        [("p", "q")],
    )


def durand_kerner(
    poly: IntPoly, max_iter: int = 600, tol: float = 1e-13
) -> list[complex]:
    """All complex roots by simultaneous (Durand-Kerner) iteration."""
    if poly.degree < 1:
        return []
    lead = poly.coeffs[-1]
    coeffs = [c / lead for c in poly.coeffs]

    def val(z: complex) -> complex:
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    d = poly.degree
    roots = [(0.4 + 0.9j) ** k for k in range(1, d + 1)]
    for _ in range(max_iter):
        moved = 0.0
        new = list(roots)
        for i in range(d):
            zi = roots[i]
            denom = 1.0 + 0j
            for j in range(d):
                if j != i:
                    denom *= zi - roots[j]
            if denom == 0:
                denom = 1e-300
            step = val(zi) / denom
            new[i] = zi - step
            moved = max(moved, abs(step))
        roots = new
        if moved < tol:
            break
    return roots


def _is_palindromic_up_to_sign(p: IntPoly) -> bool:
    rec = reciprocal(p, p.degree)
    return rec == p or rec == -p


def _expected_pq(m: int) -> tuple[int, int]:
    if m % 2 == 1:
        k = (m - 1) // 2
        return (k, k + 1)
    if m % 4 == 0:
        k = m // 4
        return (2 * k - 1, 2 * k + 1)
    k = (m - 2) // 4
    return (2 * k - 1, 2 * k + 3)


def integer_search_deltan(m: int, modulus_gap: float = 1e-6) -> dict:
    """Search integer short-curve lengths (p, q) in the terminal family.

    For 1 <= p <= q with p + q <= m (the long cycle fixed at length m, the
    bridges as well), form the clique polynomial with integer exponents,
    keep candidates whose degree-matched reciprocal is palindromic up to
    sign and whose reciprocal has a unique root of maximum modulus, and
    return the one minimizing the growth rate.  The winner must match the
    parity rule (k, k+1) / (2k-1, 2k+1) / (2k-1, 2k+3).
    """
    if m < 5:
        raise ValueError("m must be at least 5")
    fam = terminal_family()
    candidates = []
    winner = None
    for p in range(1, m + 1):
        for q in range(p, m - p + 1):
            g = instantiate(fam, {"p": p, "q": q, "u": m, "m": m})
            q_int = clique_polynomial(g).as_intpoly()
            entry = {"p": p, "q": q, "reciprocal": False, "unique_max": None,
                     "value": None}
            if _is_palindromic_up_to_sign(q_int):
                entry["reciprocal"] = True
                char = reciprocal(q_int, q_int.degree)
                moduli = sorted(
                    (abs(z) for z in durand_kerner(char)), reverse=True
                )
                unique = len(moduli) < 2 or moduli[0] - moduli[1] > modulus_gap
                entry["unique_max"] = unique
                if unique:
                    r = smallest_positive_root(q_int.as_exppoly(), tol=1e-13)
                    value = 1.0 / r
                    entry["value"] = value
                    if (
                        winner is None
                        or value < winner[0] - 1e-12
                        or (abs(value - winner[0]) <= 1e-12
                            and (p, q) < winner[1])
                    ):
                        winner = (value, (p, q))
            candidates.append(entry)
    if winner is None:
        raise ArithmeticError("no candidate passed the reciprocity filters")
    value, pq = winner
    expected = _expected_pq(m)
    if pq != expected:
        raise ArithmeticError(
            f"integer search winner {pq} does not match the parity rule "
            f"{expected} for m={m}"
        )
    return {"pq": pq, "value": value, "candidates": candidates}


# ---------------------------------------------------------------------------
# TOML case files


def case_from_dict(data: Mapping) -> CaseSpec:
    try:
        fam = data["family"]
        groups = [
            (g["name"], g.get("symbol", g["name"]), int(g.get("count", 1)))
            for g in fam["groups"]
        ]
        edges = [tuple(e) for e in fam.get("edges", [])]
        constraints = tuple(
            Constraint.of(c["coeffs"], c["bound"], c.get("label", ""))
            for c in data.get("constraints", [])
        )
        reductions = tuple(
            Reduction.of(r["symbol"], r.get("const", 0.0), r.get("coeffs"),
                         r.get("anchor", ""))
            for r in data.get("reductions", [])
        )
        return CaseSpec(
            id=data["id"],
            section=data.get("section", "custom"),
            family=_family(groups, edges),
            constraints=constraints,
            reductions=reductions,
            expected_bound=float(data["expected_bound"]),
            expected_argmin=data.get("expected_argmin"),
            anchor=data.get("anchor", ""),
            prose_reconstructed=bool(data.get("prose_reconstructed", False)),
            notes=data.get("notes", ""),
        )
    except KeyError as exc:
        raise ValueError(f"case file is missing key {exc}") from None


def load_case_toml(path: str) -> CaseSpec:
    import tomli

    with open(path, "rb") as fh:
        try:
            data = tomli.load(fh)
        except tomli.TOMLDecodeError as exc:
            raise ValueError(f"{path}: {exc}") from None
    return case_from_dict(data)


def builtin_cases() -> list[CaseSpec]:
    from .cases import BUILTIN_CASES

    return list(BUILTIN_CASES)


def get_builtin(case_id: str) -> CaseSpec:
    for case in builtin_cases():
        if case.id == case_id:
            return case
    raise KeyError(f"no builtin case {case_id!r}")
