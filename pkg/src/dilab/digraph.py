"""Directed multigraphs, curves, curve complexes, exact characteristic
polynomials, and the clique-polynomial / characteristic-polynomial check.

A digraph is given by a square non-negative integer matrix A where entry
``A[j][i]`` counts the edges i -> j.  A *curve* is an embedded directed
cycle (no repeated vertices); parallel edges yield distinct curves.  The
*curve complex* is the weighted graph with one vertex per curve, weighted
by its length, and an edge between vertex-disjoint curves.

For a strongly connected digraph, the characteristic polynomial of A equals
the degree-n reciprocal of the clique polynomial of the curve complex; the
check here computes the two sides by independent routes (cycle + clique
enumeration vs. an exact Faddeev-LeVerrier recurrence) and compares
coefficients exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional

import numpy as np

from .exppoly import IntPoly, largest_positive_root, reciprocal
from .wgraph import WeightedGraph, clique_polynomial

__all__ = [
    "Digraph",
    "Curve",
    "McMullenReport",
    "NotStronglyConnectedError",
    "strongly_connected",
    "enumerate_curves",
    "curve_complex",
    "char_poly",
    "verify_mcmullen",
    "spectral_radius",
    "is_primitive",
    "random_strongly_connected",
]

DEFAULT_SIZE_LIMIT = 12


class NotStronglyConnectedError(ValueError):
    pass


@dataclass(frozen=True)
class Digraph:
    """Square non-negative integer matrix; entry (j, i) = #edges i -> j."""

    matrix: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> "Digraph":
        m = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(m)
        for row in m:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for x in row:
                if x < 0:
                    raise ValueError("matrix entries must be non-negative")
        return Digraph(m)

    @property
    def size(self) -> int:
        return len(self.matrix)

    def edge_count(self, i: int, j: int) -> int:
        """Number of edges i -> j."""
        return self.matrix[j][i]

    def successors(self, i: int) -> list[int]:
        return [j for j in range(self.size) if self.matrix[j][i] > 0]

    def to_json(self) -> str:
        return json.dumps({"matrix": [list(r) for r in self.matrix]})

    @staticmethod
    def from_json(text: str) -> "Digraph":
        return Digraph.from_rows(json.loads(text)["matrix"])


@dataclass(frozen=True, order=True)
class Curve:
    """Embedded directed cycle, canonically rotated to start at min vertex.

    ``edge_choices[k]`` selects one of the parallel edges for the step
    ``vertices[k] -> vertices[(k+1) % len]``.
    """

    vertices: tuple[int, ...]
    edge_choices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def disjoint_from(self, other: "Curve") -> bool:
        return not (self.vertex_mask & other.vertex_mask)


def strongly_connected(d: Digraph) -> bool:
    """True iff every ordered vertex pair is joined by a directed path."""
    n = d.size
    if n == 0:
        raise ValueError("empty digraph")

    def reach(start: int, forward: bool) -> int:
        seen = 1 << start
        stack = [start]
        while stack:
            v = stack.pop()
            for w in range(n):
                hit = d.matrix[w][v] if forward else d.matrix[v][w]
                if hit and not seen >> w & 1:
                    seen |= 1 << w
                    stack.append(w)
        return seen

    full = (1 << n) - 1
    return reach(0, True) == full and reach(0, False) == full


def _vertex_cycles(d: Digraph) -> list[tuple[int, ...]]:
    """All embedded vertex cycles, rooted at their smallest vertex.

    Rooting the search at each vertex with smaller-id vertices excluded
    yields each cycle exactly once, already in canonical rotation.
    """
    n = d.size
    succ = [d.successors(i) for i in range(n)]
    out: list[tuple[int, ...]] = []
    for root in range(n):
        path = [root]
        on_path = {root}

        def dfs(v: int) -> None:
            for w in succ[v]:
                if w == root:
                    out.append(tuple(path))
                elif w > root and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    dfs(w)
                    path.pop()
                    on_path.discard(w)

        dfs(root)
    return out


def enumerate_curves(
    d: Digraph, max_size: int = DEFAULT_SIZE_LIMIT
) -> list[Curve]:
    """Every curve of the digraph, one per parallel-edge choice combination.

    Output is sorted by (length, vertices, edge choices), so the order is
    canonical regardless of search order.
    """
    if d.size > max_size:
        raise ValueError(f"size {d.size} exceeds limit {max_size}")
    curves: list[Curve] = []
    for cyc in _vertex_cycles(d):
        k = len(cyc)
        ranges = [range(d.edge_count(cyc[i], cyc[(i + 1) % k])) for i in range(k)]
        for choice in product(*ranges):
            curves.append(Curve(cyc, choice))
    curves.sort(key=lambda c: (c.length, c.vertices, c.edge_choices))
    return curves


def count_curves(d: Digraph) -> int:
    """Number of curves without materializing them."""
    total = 0
    for cyc in _vertex_cycles(d):
        k = len(cyc)
        m = 1
        for i in range(k):
            m *= d.edge_count(cyc[i], cyc[(i + 1) % k])
        total += m
    return total


def curve_complex(
    d: Digraph,
    max_size: int = DEFAULT_SIZE_LIMIT,
    curves: Optional[list[Curve]] = None,
) -> WeightedGraph:
    """Weighted graph: one vertex per curve (weight = length), edges between
    vertex-disjoint curves."""
    if curves is None:
        curves = enumerate_curves(d, max_size=max_size)
    width = max(3, len(str(max(len(curves) - 1, 0))))
    ids = [f"c{i:0{width}d}" for i in range(len(curves))]
    weights = {ids[i]: c.length for i, c in enumerate(curves)}
    masks = [c.vertex_mask for c in curves]
    edges = [
        (ids[i], ids[j])
        for i in range(len(curves))
        for j in range(i + 1, len(curves))
        if not masks[i] & masks[j]
    ]
    return WeightedGraph.build(weights, edges)


def char_poly(d: Digraph) -> IntPoly:
    """det(tI - A) with exact integer coefficients.

    Uses the Faddeev-LeVerrier recurrence over exact rationals; the trace
    divisions are exact, and integrality is asserted at the end.
    """
    n = d.size
    a = [[Fraction(d.matrix[i][j]) for j in range(n)] for i in range(n)]

    def matmul(x, y):
        return [
            [sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]

    coeffs = [Fraction(1)]  # c_0 = 1 for t**n
    m = [row[:] for row in a]
    for k in range(1, n + 1):
        ck = -sum(m[i][i] for i in range(n)) / k
        coeffs.append(ck)
        if k < n:
            for i in range(n):
                m[i][i] += ck
            m = matmul(a, m)
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("characteristic recurrence lost integrality")
    # coeffs[k] multiplies t**(n-k)
    dense = [0] * (n + 1)
    for k, c in enumerate(coeffs):
        dense[n - k] = int(c)
    return IntPoly.from_coeffs(dense)


@dataclass(frozen=True)
class McMullenReport:
    equal: bool
    char: IntPoly
    clique: IntPoly
    clique_reciprocal: IntPoly
    curve_count: int
    primitive: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "equal": self.equal,
                "char_poly": list(self.char.coeffs),
                "clique_poly": list(self.clique.coeffs),
                "clique_reciprocal": list(self.clique_reciprocal.coeffs),
                "curve_count": self.curve_count,
                "primitive": self.primitive,
            }
        )


def verify_mcmullen(
    d: Digraph,
    max_size: int = DEFAULT_SIZE_LIMIT,
    clique_limit: int = 20_000,
) -> McMullenReport:
    """Check char(A) == reciprocal of the curve-complex clique polynomial.

    Both sides are exact integer polynomials, so the comparison is
    coefficient-by-coefficient equality.  Requires strong connectivity.
    """
    if not strongly_connected(d):
        raise NotStronglyConnectedError("digraph is not strongly connected")
    curves = enumerate_curves(d, max_size=max_size)
    g = curve_complex(d, curves=curves)
    q = clique_polynomial(g, max_vertices=clique_limit).as_intpoly()
    rec = reciprocal(q, d.size)
    ch = char_poly(d)
    return McMullenReport(
        equal=rec == ch,
        char=ch,
        clique=q,
        clique_reciprocal=rec,
        curve_count=len(curves),
        primitive=is_primitive(d),
    )


def is_primitive(d: Digraph) -> bool:
    """True iff some power of A is strictly positive (checked at A**(n*n))."""
    n = d.size
    rows = [
        sum(1 << j for j in range(n) if d.matrix[i][j] > 0) for i in range(n)
    ]
    full = (1 << n) - 1

    def bmul(x: list[int], y: list[int]) -> list[int]:
        out = [0] * n
        for i in range(n):
            acc = 0
            xi = x[i]
            for j in range(n):
                if xi >> j & 1:
                    acc |= y[j]
            out[i] = acc
        return out

    # square-and-multiply up to exponent n*n
    result = [1 << i for i in range(n)]  # identity
    base = rows
    e = n * n
    while e:
        if e & 1:
            result = bmul(result, base)
        base = bmul(base, base)
        e >>= 1
    return all(r == full for r in result)


def spectral_radius(d: Digraph, tol: float = 1e-12) -> float:
    """Largest positive root of the characteristic polynomial.

    For a strongly connected digraph with a strictly positive power this is
    the Perron-Frobenius eigenvalue; reducible or non-primitive inputs are
    still answered when a positive root exists (flagged via
    ``is_primitive``).
    """
    return largest_positive_root(char_poly(d), tol=tol)


def random_strongly_connected(
    rng: np.random.Generator,
    size: int,
    max_entry: int = 2,
    max_curves: int = 1500,
    max_tries: int = 10_000,
) -> Digraph:
    """Draw a random strongly connected digraph with bounded entries.

    Entries are skewed toward 0/1 and instances whose curve count exceeds
    ``max_curves`` are redrawn, keeping downstream clique enumeration
    tractable.  Deterministic for a given generator state.
    """
    probs = np.array([0.5, 0.3, 0.2][: max_entry + 1], dtype=float)
    probs = probs / probs.sum()
    for _ in range(max_tries):
        m = rng.choice(max_entry + 1, size=(size, size), p=probs)
        d = Digraph.from_rows(m.tolist())
        if not strongly_connected(d):
            continue
        if count_curves(d) > max_curves:
            continue
        return d
    raise RuntimeError("failed to sample a strongly connected digraph")
