"""Weighted graphs, clique polynomials, growth rates, and vertex sums.

A weighted graph is a simple undirected graph with strictly positive vertex
weights.  Its clique polynomial is the alternating sum over all cliques K
(the empty set included)

    Q(t) = sum_K (-1)**|K| * t**w(K),

and the growth rate of the associated right-angled Artin semigroup is the
reciprocal of the smallest positive zero of Q.

Weights may be floats or exact rationals (``int``/``Fraction``).  When every
weight is rational, terms with equal total weight are merged exactly; with
float weights, terms are merged when their exponents agree to 1e-12.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Optional, Sequence

from .exppoly import ExpPoly, smallest_positive_root

__all__ = [
    "WeightedGraph",
    "Clique",
    "GraphTooLargeError",
    "enumerate_cliques",
    "clique_polynomial",
    "growth_rate",
    "vertex_sum",
    "scale_weights",
    "induced_subgraph",
    "wide_subgraph",
]

DEFAULT_VERTEX_LIMIT = 40
MERGE_TOL = 1e-12
_GROWTH_ONE_SNAP = 1e-6


class GraphTooLargeError(ValueError):
    """Clique enumeration refused: vertex count above the configured limit."""


def _check_weight(w) -> None:
    if isinstance(w, Rational):
        if w <= 0:
            raise ValueError(f"non-positive weight {w!r}")
    elif isinstance(w, float):
        if not w > 0:
            raise ValueError(f"non-positive weight {w!r}")
    else:
        raise TypeError(f"weight must be float or rational, got {type(w)!r}")


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with positive vertex weights.

    ``vertices`` maps id -> weight; ``edges`` is a frozenset of sorted id
    pairs.  No self-loops, no parallel edges, every endpoint declared.
    """

    _weights: tuple[tuple[str, object], ...]
    edges: frozenset[tuple[str, str]]

    @staticmethod
    def build(
        weights: Mapping[str, object], edges: Iterable[Sequence[str]]
    ) -> "WeightedGraph":
        for w in weights.values():
            _check_weight(w)
        edge_set = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in weights or v not in weights:
                raise ValueError(f"edge ({u!r}, {v!r}) has undeclared endpoint")
            edge_set.add((u, v) if u < v else (v, u))
        items = tuple(sorted(weights.items()))
        return WeightedGraph(items, frozenset(edge_set))

    @property
    def vertices(self) -> dict[str, object]:
        return dict(self._weights)

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self._weights)

    def weight(self, v: str):
        return dict(self._weights)[v]

    def __len__(self) -> int:
        return len(self._weights)

    def adjacent(self, u: str, v: str) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self.edges

    def neighbors(self, v: str) -> set[str]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def all_rational(self) -> bool:
        return all(isinstance(w, Rational) for _, w in self._weights)

    # -- JSON wire format --------------------------------------------------

    def to_json(self) -> str:
        verts = [
            {"id": v, "weight": _weight_to_json(w)} for v, w in self._weights
        ]
        return json.dumps(
            {"vertices": verts, "edges": [list(e) for e in sorted(self.edges)]}
        )

    @staticmethod
    def from_json(text: str) -> "WeightedGraph":
        data = json.loads(text)
        weights = {
            item["id"]: _weight_from_json(item["weight"])
            for item in data["vertices"]
        }
        return WeightedGraph.build(weights, data.get("edges", []))


def _weight_to_json(w):
    if isinstance(w, Fraction):
        return {"num": w.numerator, "den": w.denominator}
    if isinstance(w, Rational) and not isinstance(w, int):
        return {"num": int(w.numerator), "den": int(w.denominator)}
    return w


def _weight_from_json(value):
    """Weights arrive as numbers, decimal strings, or {"num","den"} pairs."""
    if isinstance(value, dict):
        return Fraction(int(value["num"]), int(value["den"]))
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, bool):
        raise ValueError("weight must be numeric")
    if isinstance(value, int):
        return Fraction(value)
    return float(value)


@dataclass(frozen=True)
class Clique:
    """A set of pairwise-adjacent vertices; the empty set counts."""

    members: frozenset[str]

    @property
    def size(self) -> int:
        return len(self.members)

    def weight(self, g: WeightedGraph):
        weights = g.vertices
        return sum(weights[v] for v in self.members)


def _adjacency_masks(g: WeightedGraph) -> tuple[list[str], list[int]]:
    order = list(g.vertex_ids)
    index = {v: i for i, v in enumerate(order)}
    masks = [0] * len(order)
    for a, b in g.edges:
        ia, ib = index[a], index[b]
        masks[ia] |= 1 << ib
        masks[ib] |= 1 << ia
    return order, masks


def _visit_cliques(g: WeightedGraph, visit, max_vertices: int) -> None:
    """Call ``visit(mask, size)`` once per clique, in lexicographic order.

    Cliques are generated by recursive extension over the sorted vertex
    order: each clique appears exactly once, as the extension of its
    lexicographically smallest member chain.
    """
    n = len(g)
    if n > max_vertices:
        raise GraphTooLargeError(
            f"{n} vertices exceeds the clique enumeration limit {max_vertices}"
        )
    _, masks = _adjacency_masks(g)
    # restrict each adjacency mask to strictly larger indices
    gt = [masks[i] & ~((1 << (i + 1)) - 1) for i in range(n)]

    def rec(mask: int, size: int, cand: int) -> None:
        visit(mask, size)
        c = cand
        while c:
            low = c & -c
            c ^= low
            j = low.bit_length() - 1
            rec(mask | low, size + 1, cand & gt[j])

    rec(0, 0, (1 << n) - 1)


def enumerate_cliques(
    g: WeightedGraph, max_vertices: int = DEFAULT_VERTEX_LIMIT
) -> list[Clique]:
    """All cliques of ``g`` including the empty one, each exactly once."""
    order = g.vertex_ids
    out: list[Clique] = []

    def visit(mask: int, size: int) -> None:
        members = frozenset(order[i] for i in range(len(order)) if mask >> i & 1)
        out.append(Clique(members))

    _visit_cliques(g, visit, max_vertices)
    return out


def clique_polynomial(
    g: WeightedGraph, max_vertices: int = DEFAULT_VERTEX_LIMIT
) -> ExpPoly:
    """Alternating clique sum as an ExpPoly in t.

    Exact-weight merging when all weights are rational; 1e-12 exponent
    clustering otherwise.  The constant term is always 1 (empty clique).
    """
    order = g.vertex_ids
    n = len(order)
    if g.all_rational():
        weights = [Fraction(w) for _, w in sorted(g.vertices.items())]
        acc: dict[Fraction, int] = {}

        def visit(mask: int, size: int) -> None:
            w = sum(weights[i] for i in range(n) if mask >> i & 1)
            sign = -1 if size % 2 else 1
            acc[w] = acc.get(w, 0) + sign

        _visit_cliques(g, visit, max_vertices)
        return ExpPoly.from_terms(
            (float(c), float(w)) for w, c in acc.items() if c
        )

    weights_f = [float(w) for _, w in sorted(g.vertices.items())]
    entries: list[tuple[float, int]] = []

    def visit_f(mask: int, size: int) -> None:
        w = math.fsum(weights_f[i] for i in range(n) if mask >> i & 1)
        entries.append((w, -1 if size % 2 else 1))

    _visit_cliques(g, visit_f, max_vertices)
    entries.sort()
    merged: list[tuple[float, float]] = []
    for w, c in entries:
        if merged and w - merged[-1][1] <= MERGE_TOL * max(1.0, abs(w)):
            merged[-1] = (merged[-1][0] + c, merged[-1][1])
        else:
            merged.append((float(c), w))
    return ExpPoly.from_terms((c, w) for c, w in merged if c != 0.0)


def growth_rate(
    g: WeightedGraph,
    tol: float = 1e-12,
    max_vertices: int = DEFAULT_VERTEX_LIMIT,
    scan_points: Optional[int] = None,
) -> float:
    """Growth rate of the right-angled Artin semigroup of ``(g, w)``.

    Computed as the reciprocal of the smallest positive zero of the clique
    polynomial, which always lies in (0, 1].  Returns exactly 1.0 in the
    polynomial-growth case (root at 1, possibly tangential).
    """
    if len(g) == 0:
        return 1.0
    q = clique_polynomial(g, max_vertices=max_vertices)
    r = smallest_positive_root(
        q, tol=tol, scan_bound=1.0 + 1e-6, scan_points=scan_points
    )
    if r is None:
        raise ArithmeticError("clique polynomial has no root in (0, 1]")
    if abs(r - 1.0) <= _GROWTH_ONE_SNAP:
        return 1.0
    return 1.0 / r


def vertex_sum(g: WeightedGraph, group: Iterable[str]) -> WeightedGraph:
    """Collapse ``group`` into one vertex carrying the summed weight.

    The new vertex is adjacent to u exactly when every group member was
    adjacent to u; everything else is untouched.  Growth rate never
    increases under this operation.
    """
    members = sorted(set(group))
    if not members:
        raise ValueError("group must be nonempty")
    weights = g.vertices
    for v in members:
        if v not in weights:
            raise ValueError(f"unknown vertex id {v!r}")
    new_id = "+".join(members)
    group_set = set(members)

    common = None
    for v in members:
        nbrs = g.neighbors(v) - group_set
        common = nbrs if common is None else common & nbrs

    new_weights = {v: w for v, w in weights.items() if v not in group_set}
    new_weights[new_id] = sum(weights[v] for v in members)
    new_edges = [
        (a, b) for a, b in g.edges if a not in group_set and b not in group_set
    ]
    new_edges.extend((new_id, u) for u in sorted(common or ()))
    return WeightedGraph.build(new_weights, new_edges)


def scale_weights(g: WeightedGraph, alpha) -> WeightedGraph:
    """Multiply every weight by alpha > 0."""
    return WeightedGraph.build(
        {v: w * alpha for v, w in g.vertices.items()}, g.edges
    )


def induced_subgraph(g: WeightedGraph, keep: Iterable[str]) -> WeightedGraph:
    keep_set = set(keep)
    weights = {v: w for v, w in g.vertices.items() if v in keep_set}
    if len(weights) != len(keep_set):
        raise ValueError("unknown vertex id in keep set")
    edges = [(a, b) for a, b in g.edges if a in keep_set and b in keep_set]
    return WeightedGraph.build(weights, edges)


def wide_subgraph(g: WeightedGraph, drop_edges: Iterable[Sequence[str]]) -> WeightedGraph:
    """Same vertices, a subset of the edges."""
    drop = {(min(u, v), max(u, v)) for u, v in drop_edges}
    return WeightedGraph.build(
        g.vertices, [e for e in g.edges if e not in drop]
    )
