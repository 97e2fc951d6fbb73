"""Based-fold transition-matrix calculus on a labeled edge set.

Edges carry a role, filament or petal.  A based fold is one of four moves,
each acting on a pair of edges (e0, e1) and multiplying the accumulated
transition matrix on the left by the identity plus a fixed 2x2 unimodular
block in the {e0, e1} rows/columns:

    kind 1  (filament onto filament, k >= 0 interior folds)
            [[k+1, k+2], [k, k+1]]      roles unchanged
    kind 2  (petal e1 onto filament e0, twice)
            [[1, 2], [0, 1]]            roles unchanged
    kind 3  (petal e1 onto filament e0, then e0 onto e1)
            [[1, 1], [1, 2]]            e0 and e1 swap roles
    kind 4  (anything e1 onto petal e0)
            [[1, 1], [0, 1]]            roles unchanged

Alongside the matrix, a permutation zeta of the edge labels accumulates:
kind 1 with odd k and kind 3 swap e0 and e1, everything else leaves zeta
alone.  A closing isomorphism (role-preserving permutation) may finish the
script.  Invariants: det = +-1 throughout, zeta maps the initial role of an
edge to the same role now, every (zeta(e), e) matrix entry is positive, and
on filament rows the matrix minus the permutation matrix of zeta is even
and non-negative.

Matrix entries are Python integers: a long fold script grows entries
geometrically and must not overflow.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

__all__ = [
    "FILAMENT",
    "PETAL",
    "Fold",
    "FoldState",
    "FoldScriptError",
    "ParityReport",
    "new_state",
    "elementary_fold_matrix",
    "fold_matrix",
    "apply_fold",
    "close_with_isomorphism",
    "check_parity",
    "determinant",
    "run_script",
    "random_script",
]

FILAMENT = "filament"
PETAL = "petal"

_BLOCKS = {
    2: ((1, 2), (0, 1)),
    3: ((1, 1), (1, 2)),
    4: ((1, 1), (0, 1)),
}


class FoldScriptError(ValueError):
    """A fold script violated a role precondition or referenced unknown ids."""


@dataclass(frozen=True)
class Fold:
    kind: int
    e0: str
    e1: str
    k: int = 0
    # optional declared role of e1 for kind 4, validated against the state
    e1_role: Optional[str] = None

    def __post_init__(self):
        if self.kind not in (1, 2, 3, 4):
            raise FoldScriptError(f"unknown fold kind {self.kind}")
        if self.kind != 1 and self.k:
            raise FoldScriptError("k is only meaningful for kind 1")
        if self.k < 0:
            raise FoldScriptError("k must be non-negative")
        if self.e0 == self.e1:
            raise FoldScriptError("e0 and e1 must differ")


@dataclass(frozen=True)
class FoldState:
    """Accumulated matrix, zeta permutation, and current edge roles.

    ``matrix[i][j]`` is the (edges[i], edges[j]) entry.  ``zeta[j] = i``
    means edge j maps to edge i.  ``initial_roles`` is kept so the
    role-preservation of zeta can be checked against the starting roles.
    """

    edges: tuple[str, ...]
    roles: tuple[str, ...]
    initial_roles: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]
    zeta: tuple[int, ...]

    def index(self, e: str) -> int:
        try:
            return self.edges.index(e)
        except ValueError:
            raise FoldScriptError(f"unknown edge id {e!r}") from None

    def role(self, e: str) -> str:
        return self.roles[self.index(e)]

    @property
    def filament_count(self) -> int:
        return sum(1 for r in self.roles if r == FILAMENT)

    @property
    def petal_count(self) -> int:
        return sum(1 for r in self.roles if r == PETAL)

    def zeta_map(self) -> dict[str, str]:
        return {self.edges[j]: self.edges[i] for j, i in enumerate(self.zeta)}

    def to_json(self) -> str:
        return json.dumps(
            {
                "edges": [
                    {"id": e, "role": r} for e, r in zip(self.edges, self.roles)
                ],
                "matrix": [list(r) for r in self.matrix],
                "zeta": self.zeta_map(),
                "det": determinant(self.matrix),
            }
        )


def new_state(roles: Mapping[str, str] | Iterable[tuple[str, str]]) -> FoldState:
    """Fresh state: identity matrix and identity zeta over the given edges."""
    items = list(roles.items()) if isinstance(roles, Mapping) else list(roles)
    if not items:
        raise FoldScriptError("at least one edge is required")
    ids = [e for e, _ in items]
    if len(set(ids)) != len(ids):
        raise FoldScriptError("duplicate edge id")
    for _, r in items:
        if r not in (FILAMENT, PETAL):
            raise FoldScriptError(f"unknown role {r!r}")
    n = len(items)
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    role_tuple = tuple(r for _, r in items)
    return FoldState(
        edges=tuple(ids),
        roles=role_tuple,
        initial_roles=role_tuple,
        matrix=ident,
        zeta=tuple(range(n)),
    )


def elementary_fold_matrix(
    edge_count: int, e0: int, e1: int
) -> tuple[tuple[int, ...], ...]:
    """Identity plus a single 1 in the (e0, e1) entry."""
    if not (0 <= e0 < edge_count and 0 <= e1 < edge_count):
        raise IndexError("edge index out of range")
    if e0 == e1:
        raise ValueError("e0 and e1 must differ")
    return tuple(
        tuple(
            1 if i == j else (1 if (i, j) == (e0, e1) else 0)
            for j in range(edge_count)
        )
        for i in range(edge_count)
    )


def _require_roles(state: FoldState, f: Fold) -> tuple[int, int]:
    i0, i1 = state.index(f.e0), state.index(f.e1)
    r0, r1 = state.roles[i0], state.roles[i1]
    if f.kind == 1 and (r0, r1) != (FILAMENT, FILAMENT):
        raise FoldScriptError(f"kind 1 needs two filaments, got ({r0}, {r1})")
    if f.kind in (2, 3) and (r0, r1) != (FILAMENT, PETAL):
        raise FoldScriptError(
            f"kind {f.kind} needs e0 filament and e1 petal, got ({r0}, {r1})"
        )
    if f.kind == 4:
        if r0 != PETAL:
            raise FoldScriptError(f"kind 4 needs e0 petal, got {r0}")
        if f.e1_role is not None and f.e1_role != r1:
            raise FoldScriptError(
                f"declared e1 role {f.e1_role!r} does not match state ({r1})"
            )
    return i0, i1


def fold_matrix(f: Fold, state: FoldState) -> tuple[tuple[int, ...], ...]:
    """The move's transition matrix: identity with the kind's 2x2 block at
    rows/columns {e0, e1}."""
    i0, i1 = _require_roles(state, f)
    if f.kind == 1:
        block = ((f.k + 1, f.k + 2), (f.k, f.k + 1))
    else:
        block = _BLOCKS[f.kind]
    n = len(state.edges)
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    m[i0][i0], m[i0][i1] = block[0]
    m[i1][i0], m[i1][i1] = block[1]
    return tuple(tuple(row) for row in m)


def _matmul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def apply_fold(state: FoldState, f: Fold) -> FoldState:
    """Left-multiply by the fold matrix; update zeta and the roles.

    zeta picks up the (e0 e1) swap exactly for kind 1 with odd k and for
    kind 3; kind 3 also swaps the filament/petal roles of e0 and e1.
    """
    i0, i1 = _require_roles(state, f)
    m = _matmul(fold_matrix(f, state), state.matrix)

    swap_zeta = (f.kind == 1 and f.k % 2 == 1) or f.kind == 3
    if swap_zeta:
        tr = {i0: i1, i1: i0}
        zeta = tuple(tr.get(i, i) for i in state.zeta)
    else:
        zeta = state.zeta

    roles = list(state.roles)
    if f.kind == 3:
        roles[i0], roles[i1] = roles[i1], roles[i0]

    return replace(state, matrix=m, zeta=zeta, roles=tuple(roles))


def close_with_isomorphism(state: FoldState, perm: Mapping[str, str]) -> FoldState:
    """Apply a role-preserving relabeling: matrix <- P @ matrix, zeta <- perm o zeta."""
    n = len(state.edges)
    images = [state.index(perm.get(e, e)) for e in state.edges]
    if sorted(images) != list(range(n)):
        raise FoldScriptError("closing map is not a permutation")
    for j, i in enumerate(images):
        if state.roles[j] != state.roles[i]:
            raise FoldScriptError(
                f"closing permutation sends {state.edges[j]} ({state.roles[j]}) "
                f"to {state.edges[i]} ({state.roles[i]})"
            )
    p = [[0] * n for _ in range(n)]
    for j, i in enumerate(images):
        p[i][j] = 1
    m = _matmul(tuple(tuple(r) for r in p), state.matrix)
    zeta = tuple(images[i] for i in state.zeta)
    return replace(state, matrix=m, zeta=zeta)


@dataclass(frozen=True)
class ParityReport:
    ok: bool
    violations: tuple[str, ...]


def check_parity(state: FoldState) -> ParityReport:
    """Check the fold-script invariants on the accumulated state.

    * on every filament row e', each entry of (matrix - Z) is even and
      non-negative, where Z is the permutation matrix of zeta;
    * every (zeta(e), e) entry of the matrix is at least 1.
    """
    n = len(state.edges)
    bad: list[str] = []
    for j in range(n):
        i = state.zeta[j]
        if state.matrix[i][j] < 1:
            bad.append(
                f"matrix[{state.edges[i]},{state.edges[j]}] = "
                f"{state.matrix[i][j]} < 1 on the zeta position"
            )
    for i in range(n):
        if state.roles[i] != FILAMENT:
            continue
        for j in range(n):
            z = 1 if state.zeta[j] == i else 0
            v = state.matrix[i][j] - z
            if v < 0 or v % 2:
                bad.append(
                    f"(matrix - zeta)[{state.edges[i]},{state.edges[j]}] = {v}"
                )
    return ParityReport(ok=not bad, violations=tuple(bad))


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    n = len(matrix)
    a = [[int(x) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


# ---------------------------------------------------------------------------
# scripts


def run_script(script: Mapping) -> FoldState:
    """Execute a script dict; raises FoldScriptError with the step index."""
    edges = script.get("edges")
    if not edges:
        raise FoldScriptError("script needs a nonempty 'edges' list")
    state = new_state([(e["id"], e["role"]) for e in edges])
    for idx, item in enumerate(script.get("folds", ())):
        try:
            fold = Fold(
                kind=int(item["kind"]),
                e0=item["e0"],
                e1=item["e1"],
                k=int(item.get("k", 0)),
                e1_role=item.get("e1_role"),
            )
            state = apply_fold(state, fold)
        except (KeyError, FoldScriptError) as exc:
            raise FoldScriptError(f"fold step {idx}: {exc}") from None
    perm = script.get("closing_perm")
    if perm:
        state = close_with_isomorphism(state, perm)
    return state


def random_script(
    rng: np.random.Generator,
    n_edges: int,
    n_folds: int,
    max_k: int = 3,
    closing: bool = True,
) -> dict:
    """Seed-controlled random valid script (uniform over valid kinds).

    Initial roles are random but at least one edge of some role always
    exists; at each step the kind is drawn uniformly among those whose role
    preconditions can be met.
    """
    if n_edges < 2:
        raise ValueError("need at least two edges")
    ids = [f"e{i}" for i in range(n_edges)]
    roles = {e: (FILAMENT if rng.random() < 0.6 else PETAL) for e in ids}
    script = {
        "edges": [{"id": e, "role": roles[e]} for e in ids],
        "folds": [],
    }
    current = dict(roles)
    for _ in range(n_folds):
        filaments = [e for e in ids if current[e] == FILAMENT]
        petals = [e for e in ids if current[e] == PETAL]
        kinds = []
        if len(filaments) >= 2:
            kinds.append(1)
        if filaments and petals:
            kinds.extend([2, 3])
        if petals:
            kinds.append(4)
        if not kinds:
            break
        kind = int(rng.choice(kinds))
        if kind == 1:
            i0, i1 = rng.choice(len(filaments), size=2, replace=False)
            fold = {"kind": 1, "k": int(rng.integers(0, max_k + 1)),
                    "e0": filaments[int(i0)], "e1": filaments[int(i1)]}
        elif kind in (2, 3):
            e0 = filaments[int(rng.integers(len(filaments)))]
            e1 = petals[int(rng.integers(len(petals)))]
            fold = {"kind": kind, "e0": e0, "e1": e1}
            if kind == 3:
                current[e0], current[e1] = current[e1], current[e0]
        else:
            e0 = petals[int(rng.integers(len(petals)))]
            others = [e for e in ids if e != e0]
            e1 = others[int(rng.integers(len(others)))]
            fold = {"kind": 4, "e0": e0, "e1": e1}
        script["folds"].append(fold)
    if closing:
        # random role-preserving permutation of the final roles
        perm: dict[str, str] = {}
        for role in (FILAMENT, PETAL):
            group = [e for e in ids if current[e] == role]
            images = list(group)
            rng.shuffle(images)
            perm.update(dict(zip(group, images)))
        script["closing_perm"] = perm
    return script
