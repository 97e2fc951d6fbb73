"""Command-line front end.

Subcommands:

* ``delta``            parity-root values, lower bounds, table output
* ``verify-mcmullen``  randomized digraph check of the clique/characteristic
                       polynomial identity plus spectral comparison
* ``minimize``         run a bundled or user-supplied minimization case
* ``growth``           growth rate of a weighted graph file
* ``curves``           curves and curve complex of a digraph file
* ``fold``             run a fold script and check its invariants

Human output is Markdown with floats rounded to 6 decimals; ``--json``
emits full precision.  Identical inputs and seed produce byte-identical
output (timings are only included on request).  Exit codes: 0 success,
1 verification failure, 2 usage or format errors.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .casework import (
    builtin_cases,
    get_builtin,
    in_underline_N,
    load_case_toml,
    lower_bound,
    minimize_case,
    underline_delta,
)
from .digraph import (
    Digraph,
    curve_complex,
    enumerate_curves,
    is_primitive,
    random_strongly_connected,
    spectral_radius,
    verify_mcmullen,
)
from .foldcalc import FoldScriptError, check_parity, determinant, run_script
from .wgraph import WeightedGraph, clique_polynomial, growth_rate

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

# slots of the minimum-dilatation table that remain open
UNKNOWN_SLOTS = frozenset({10, 12, 14, 18, 22, 26})


def _thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("DILAB_THREADS", "1")))
    except ValueError:
        return 1


def _digest(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict
    seed: Optional[int] = None
    timing_s: Optional[float] = None

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs_digest": _digest(self.inputs),
            "inputs": self.inputs,
            "results": self.results,
            "seed": self.seed,
        }
        if self.timing_s is not None:
            payload["timing_s"] = self.timing_s
        return json.dumps(payload, sort_keys=True, indent=2)


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def _emit(args, report: RunReport, human_lines: list[str]) -> None:
    if args.json:
        print(report.to_json())
    else:
        for line in human_lines:
            print(line)


# ---------------------------------------------------------------------------
# delta


def _table_value(n: int) -> Optional[float]:
    """Known minimum dilatation for n strands, or None for an open slot."""
    if n in (3, 4, 5, 7, 8):
        return underline_delta(n)
    if n == 6:
        # the 6-strand minimum coincides with the 5-strand value
        return underline_delta(5)
    if in_underline_N(n):
        return underline_delta(n)
    return None


def cmd_delta(args) -> int:
    if args.table:
        rows = []
        header = ["k", "n=4k-1", "n=4k", "n=4k+1", "n=4k+2"]
        for k in range(1, args.max_k + 1):
            row = [str(k)]
            for n in (4 * k - 1, 4 * k, 4 * k + 1, 4 * k + 2):
                v = _table_value(n)
                row.append("???" if v is None else f"{v:.5f}")
            rows.append(row)
        if args.csv:
            print(",".join(header))
            for row in rows:
                print(",".join(row))
        elif args.json:
            data = {
                "rows": [
                    {
                        "k": k,
                        "values": {
                            str(n): _table_value(n)
                            for n in (4 * k - 1, 4 * k, 4 * k + 1, 4 * k + 2)
                        },
                    }
                    for k in range(1, args.max_k + 1)
                ]
            }
            report = RunReport("delta", {"table": True, "max_k": args.max_k},
                               data)
            print(report.to_json())
        else:
            print("| " + " | ".join(header) + " |")
            print("|" + "|".join("---" for _ in header) + "|")
            for row in rows:
                print("| " + " | ".join(row) + " |")
        return EXIT_OK

    n = args.n
    d = underline_delta(n)
    lb = lower_bound(n)
    member = in_underline_N(n)
    known = _table_value(n)
    results = {
        "n": n,
        "delta_lower": d,
        "lower_bound": lb,
        "in_underline_N": member,
        "min_dilatation": known,
        "status": "known" if known is not None else "???",
    }
    report = RunReport("delta", {"n": n}, results)
    lines = [
        f"n = {n}",
        f"parity-root value   = {_fmt(d)}",
        f"lower bound         = {_fmt(lb)}",
        f"in underline-N      = {'yes' if member else 'no'}",
    ]
    if known is not None:
        lines.append(f"minimum dilatation  = {_fmt(known)}")
    else:
        lines.append("minimum dilatation  = ???  (open; parity-root value "
                     "shown above for reference)")
    _emit(args, report, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-mcmullen


def _verify_one(payload) -> dict:
    seed, size_cap, max_entry = payload
    rng = np.random.default_rng(seed)
    size = int(rng.integers(2, size_cap + 1))
    d = random_strongly_connected(rng, size, max_entry=max_entry)
    rep = verify_mcmullen(d)
    lam = growth_rate(
        curve_complex(d), max_vertices=20_000, scan_points=50_000
    )
    rho = spectral_radius(d)
    return {
        "seed": int(seed),
        "size": size,
        "matrix": [list(r) for r in d.matrix],
        "equal": rep.equal,
        "char_poly": list(rep.char.coeffs),
        "clique_poly": list(rep.clique.coeffs),
        "spectral_radius": rho,
        "growth_rate": lam,
        "spectral_gap": abs(lam - rho),
        "primitive": rep.primitive,
    }


def cmd_verify_mcmullen(args) -> int:
    if args.size > 8:
        raise UsageError("--size must be at most 8")
    jobs = [(args.seed + i, args.size, args.max_entry)
            for i in range(args.trials)]
    workers = _thread_cap()
    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    results.sort(key=lambda r: r["seed"])

    failures = [
        r for r in results if not r["equal"] or r["spectral_gap"] > 1e-9
    ]
    ok = len(results) - len(failures)
    summary = {
        "trials": args.trials,
        "ok": ok,
        "failures": [
            {k: r[k] for k in ("seed", "matrix", "equal", "spectral_gap")}
            for r in failures
        ],
    }
    if args.trials == 1:
        summary["report"] = results[0]
    report = RunReport(
        "verify-mcmullen",
        {"size": args.size, "trials": args.trials, "seed": args.seed},
        summary,
        seed=args.seed,
    )
    lines = [f"{ok}/{args.trials} ok"]
    if args.trials == 1:
        r = results[0]
        lines.append(f"matrix: {r['matrix']}")
        lines.append(f"characteristic polynomial coeffs: {r['char_poly']}")
        lines.append(f"clique polynomial coeffs:         {r['clique_poly']}")
        lines.append(f"equal: {r['equal']}  spectral gap: {r['spectral_gap']:.2e}")
    for f in failures:
        lines.append(f"FAILED seed={f['seed']} matrix={f['matrix']}")
    _emit(args, report, lines)
    return EXIT_OK if not failures else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# minimize


def _minimize_result_lines(res) -> list[str]:
    argmin = ", ".join(f"{k}={_fmt(v)}" for k, v in sorted(res.argmin.items()))
    return [
        f"| {res.case_id} | {_fmt(res.min_value)} | "
        f"{_fmt(res.expected_bound)} | "
        f"{'yes' if res.meets_bound else 'NO'} | {argmin} |"
    ]


def cmd_minimize(args) -> int:
    header = [
        "| case | min | expected bound | meets | argmin |",
        "|---|---|---|---|---|",
    ]
    if args.case:
        try:
            case = load_case_toml(args.case)
        except (OSError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        cases = [case]
    elif args.all_builtin:
        cases = builtin_cases()
    else:
        try:
            case = get_builtin(args.builtin)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
        if case.integer_n is not None and args.n is not None:
            case = replace(case, integer_n=args.n)
        cases = [case]

    results = []
    t0 = time.time()
    for case in cases:
        results.append(
            minimize_case(
                case,
                grid=args.grid,
                seed=args.seed,
                check_reductions=not args.no_reduction_check,
            )
        )
    lines = list(header)
    for res in results:
        lines.extend(_minimize_result_lines(res))
    strict_ids = {c.id for c in cases if c.strict}
    misses = [r for r in results if not r.meets_bound and r.case_id in strict_ids]
    if args.all_builtin:
        lines.append("")
        lines.append(
            f"{sum(r.meets_bound for r in results)}/{len(results)} cases "
            f"meet their bounds"
        )
    report = RunReport(
        "minimize",
        {
            "case": args.case,
            "builtin": args.builtin,
            "all_builtin": args.all_builtin,
            "grid": args.grid,
            "seed": args.seed,
        },
        {"results": [r.to_dict() for r in results]},
        seed=args.seed,
        timing_s=round(time.time() - t0, 3) if args.timings else None,
    )
    _emit(args, report, lines)
    return EXIT_VERIFY_FAILED if misses else EXIT_OK


# ---------------------------------------------------------------------------
# growth / curves / fold


def _load_json_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: line {exc.lineno}: {exc.msg}") from None


def cmd_growth(args) -> int:
    data = _load_json_file(args.graph)
    try:
        g = WeightedGraph.from_json(json.dumps(data))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{args.graph}: {exc}") from None
    q = clique_polynomial(g)
    lam = growth_rate(g)
    results = {
        "vertices": len(g),
        "clique_polynomial": [[c, e] for c, e in q.terms],
        "growth_rate": lam,
    }
    report = RunReport("growth", {"graph": args.graph}, results)
    lines = [
        f"vertices: {len(g)}, edges: {len(g.edges)}",
        "clique polynomial terms (coeff, exponent): "
        + ", ".join(f"({_fmt(c)}, {_fmt(e)})" for c, e in q.terms),
        f"growth rate = {_fmt(lam)}",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_curves(args) -> int:
    data = _load_json_file(args.matrix)
    try:
        d = Digraph.from_json(json.dumps(data))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{args.matrix}: {exc}") from None
    curves = enumerate_curves(d)
    g = curve_complex(d, curves=curves)
    results = {
        "curve_count": len(curves),
        "curves": [
            {"vertices": list(c.vertices), "edge_choices": list(c.edge_choices)}
            for c in curves
        ],
        "curve_complex": json.loads(g.to_json()),
        "primitive": is_primitive(d),
    }
    report = RunReport("curves", {"matrix": args.matrix}, results)
    lines = [f"{len(curves)} curves"]
    for i, c in enumerate(curves):
        lines.append(
            f"  c{i}: vertices {list(c.vertices)} choices {list(c.edge_choices)}"
        )
    lines.append(
        f"curve complex: {len(g)} vertices, {len(g.edges)} disjointness edges"
    )
    _emit(args, report, lines)
    return EXIT_OK


def cmd_fold(args) -> int:
    data = _load_json_file(args.script)
    try:
        state = run_script(data)
    except FoldScriptError as exc:
        raise UsageError(f"{args.script}: {exc}") from None
    parity = check_parity(state)
    det = determinant(state.matrix)
    results = {
        "edges": list(state.edges),
        "roles": list(state.roles),
        "matrix": [list(r) for r in state.matrix],
        "zeta": state.zeta_map(),
        "det": det,
        "parity_ok": parity.ok,
        "violations": list(parity.violations),
    }
    report = RunReport("fold", {"script": args.script}, results)
    lines = [
        "final roles: "
        + ", ".join(f"{e}:{r}" for e, r in zip(state.edges, state.roles)),
        f"matrix: {[list(r) for r in state.matrix]}",
        f"zeta: {state.zeta_map()}",
        f"det = {det}",
        f"parity check: {'ok' if parity.ok else 'VIOLATED'}",
    ]
    lines.extend(f"  {v}" for v in parity.violations)
    _emit(args, report, lines)
    return EXIT_OK if parity.ok and det in (1, -1) else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# wiring


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dilab",
        description="growth rates, curve complexes, and dilatation bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", help="parity-root values and the known table")
    p.add_argument("--n", type=int, help="strand count (>= 3)")
    p.add_argument("--table", action="store_true", help="print the table")
    p.add_argument("--max-k", type=int, default=9, help="table rows")
    p.add_argument("--csv", action="store_true", help="CSV table output")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("verify-mcmullen",
                       help="randomized clique/characteristic check")
    p.add_argument("--size", type=int, default=4, help="max digraph size (<= 8)")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-entry", type=int, default=2)
    p.set_defaults(func=cmd_verify_mcmullen)

    p = sub.add_parser("minimize", help="run minimization cases")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--case", help="TOML case file")
    g.add_argument("--builtin", help="bundled case id")
    g.add_argument("--all-builtin", action="store_true")
    p.add_argument("--n", type=int, help="strand count for the integer case")
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-reduction-check", action="store_true")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("growth", help="growth rate of a weighted graph")
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("curves", help="curves and curve complex of a digraph")
    p.add_argument("--matrix", required=True, help="matrix JSON file")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("fold", help="run a fold script")
    p.add_argument("--script", required=True, help="script JSON file")
    p.set_defaults(func=cmd_fold)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", help="JSON output")
        sp.add_argument("--timings", action="store_true",
                        help="include wall-clock timing in reports")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    try:
        if args.command == "delta":
            if not args.table and args.n is None:
                raise UsageError("delta needs --n or --table")
            if args.n is not None and args.n < 3:
                raise UsageError("--n must be at least 3")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
