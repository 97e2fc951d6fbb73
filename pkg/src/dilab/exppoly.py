"""Polynomials with real exponents, and exact integer polynomials.

Two flavours of univariate polynomial back the growth-rate machinery:

* ``ExpPoly`` -- a finite sum ``sum_i c_i * x**a_i`` with real exponents
  ``a_i >= 0``.  Clique polynomials land here once weights are normalized,
  so exponents are typically fractions like ``1/4`` or ``2 - 2a``.
* ``IntPoly`` -- a dense integer-coefficient polynomial with exact
  arithmetic, used for characteristic polynomials and for the degree-d
  reciprocal ``t**d * P(1/t)``.

Root finding is deliberately simple and robust: scan a mesh for sign
changes, bisect the first bracket, and run a golden-section refinement on
local minima of ``|p|`` to pick up tangential (even-multiplicity) roots
that never cross zero, e.g. the double root of ``1 - 2x + x**2`` at 1.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "ExpPoly",
    "IntPoly",
    "NoPositiveRootError",
    "smallest_positive_root",
    "smallest_positive_root_terms",
    "largest_positive_root",
    "reciprocal",
]

# Default absolute tolerance on root locations.  Table-style regressions are
# quoted to 5 decimals; this leaves plenty of headroom.
DEFAULT_TOL = 1e-12

# The scan step is tol**0.5, but the point count is capped so that a default
# tolerance of 1e-12 does not demand a million evaluations per call.
_MAX_SCAN_POINTS = 200_000
_MIN_SCAN_POINTS = 64
_CHUNK = 16_384


class NoPositiveRootError(ArithmeticError):
    """Raised when a positive real root was required but none was found."""


def _as_fraction(value) -> Optional[Fraction]:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return None


@dataclass(frozen=True)
class ExpPoly:
    """Sum of terms ``c * x**a`` with real exponents ``a >= 0``.

    ``terms`` is a tuple of ``(coefficient, exponent)`` pairs with strictly
    increasing exponents and no zero coefficients.
    """

    terms: tuple[tuple[float, float], ...]

    @staticmethod
    def from_terms(pairs: Iterable[tuple[float, float]]) -> "ExpPoly":
        """Build an ExpPoly, merging terms with exactly equal exponents."""
        acc: dict[float, float] = {}
        for coeff, exponent in pairs:
            e = float(exponent)
            if e < 0:
                raise ValueError(f"negative exponent {exponent!r}")
            acc[e] = acc.get(e, 0.0) + float(coeff)
        terms = tuple(
            (c, e) for e, c in sorted(acc.items()) if c != 0.0
        )
        return ExpPoly(terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> float:
        if self.terms and self.terms[0][1] == 0.0:
            return self.terms[0][0]
        return 0.0

    def has_integer_exponents(self) -> bool:
        return all(float(e).is_integer() for _, e in self.terms)

    def eval(self, x: float) -> float:
        """Evaluate at ``x`` with compensated summation.

        Requires ``x > 0`` unless every exponent is an integer; raises
        ``ValueError`` otherwise.  At ``x == 0`` the value is the constant
        term (``0**a == 0`` for ``a > 0``).
        """
        if x <= 0 and not self.has_integer_exponents():
            if x < 0:
                raise ValueError("negative base with non-integer exponents")
            return self.constant_term()
        if x == 0:
            return self.constant_term()
        return math.fsum(c * math.pow(x, e) for c, e in self.terms)

    def eval_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized evaluation on positive inputs (plain summation)."""
        if not self.terms:
            return np.zeros_like(xs, dtype=float)
        coeffs = np.array([c for c, _ in self.terms])
        exps = np.array([e for _, e in self.terms])
        return np.power(xs[:, None], exps[None, :]) @ coeffs

    def __call__(self, x: float) -> float:
        return self.eval(x)

    def to_json(self) -> str:
        return json.dumps({"terms": [[c, e] for c, e in self.terms]})

    @staticmethod
    def from_json(text: str) -> "ExpPoly":
        data = json.loads(text)
        return ExpPoly.from_terms((c, e) for c, e in data["terms"])

    def as_intpoly(self) -> "IntPoly":
        """Exact conversion; requires integer exponents and coefficients."""
        coeffs: dict[int, int] = {}
        for c, e in self.terms:
            if not float(e).is_integer():
                raise ValueError(f"non-integer exponent {e!r}")
            if not float(c).is_integer():
                raise ValueError(f"non-integer coefficient {c!r}")
            coeffs[int(e)] = int(c)
        return IntPoly.from_pairs(coeffs.items())


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of x**i.

    All arithmetic is exact (Python integers).  The zero polynomial is
    represented by an empty coefficient tuple.
    """

    coeffs: tuple[int, ...]

    @staticmethod
    def from_coeffs(coeffs: Sequence[int]) -> "IntPoly":
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPoly(tuple(cs))

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[int, int]]) -> "IntPoly":
        items = dict()
        for e, c in pairs:
            items[int(e)] = items.get(int(e), 0) + int(c)
        if not items:
            return IntPoly(())
        top = max(items)
        return IntPoly.from_coeffs([items.get(i, 0) for i in range(top + 1)])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x):
        return self.eval(x)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def to_json(self) -> str:
        return json.dumps({"coeffs": list(self.coeffs)})

    @staticmethod
    def from_json(text: str) -> "IntPoly":
        return IntPoly.from_coeffs(json.loads(text)["coeffs"])

    def as_exppoly(self) -> ExpPoly:
        return ExpPoly.from_terms(
            (float(c), float(e)) for e, c in enumerate(self.coeffs) if c
        )


def reciprocal(p: IntPoly, degree: int) -> IntPoly:
    """Return ``t**degree * p(1/t)`` as an IntPoly.

    ``degree`` must be at least the degree of ``p``.  Applying the map twice
    with the same degree is the identity on polynomials of exactly that
    degree.
    """
    if p.is_zero:
        return p
    if degree < p.degree:
        raise ValueError(f"degree {degree} smaller than deg p = {p.degree}")
    out = [0] * (degree + 1)
    for i, c in enumerate(p.coeffs):
        out[degree - i] = c
    return IntPoly.from_coeffs(out)


# ---------------------------------------------------------------------------
# root scanning


def _sign_at_zero_plus(coeffs: np.ndarray, exps: np.ndarray) -> float:
    """Sign of the polynomial just to the right of 0 (lowest-order term)."""
    i = int(np.argmin(exps))
    return math.copysign(1.0, coeffs[i])


def _terms_eval_chunk(coeffs: np.ndarray, exps: np.ndarray, xs: np.ndarray) -> np.ndarray:
    return np.power(xs[:, None], exps[None, :]) @ coeffs


def _terms_eval_scalar(coeffs: np.ndarray, exps: np.ndarray, x: float) -> float:
    return math.fsum(c * math.pow(x, e) for c, e in zip(coeffs, exps))


def _bisect_root(f, lo: float, flo: float, hi: float, tol: float) -> float:
    """Standard bisection on a sign change; returns the midpoint at width tol."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _golden_min(f, lo: float, hi: float, iters: int = 80) -> tuple[float, float]:
    """Golden-section minimization of f on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if b - a < 1e-15 * max(1.0, abs(a)):
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return (c, fc) if fc < fd else (d, fd)


def smallest_positive_root_terms(
    coeffs: Sequence[float],
    exps: Sequence[float],
    tol: float = DEFAULT_TOL,
    scan_bound: float = 1.0 + 1e-6,
    scan_points: Optional[int] = None,
) -> Optional[float]:
    """Smallest root in ``(0, scan_bound]`` of ``sum c_i x**e_i``, or None.

    Mesh points are spaced ``tol**0.5`` apart (capped at a fixed budget and
    evaluated in vectorized chunks); the first sign change is bisected down
    to ``tol``.  Before that bracket, each local minimum of ``|p|`` on the
    mesh is refined by golden section and classified either as a tangential
    root (refined minimum below ``tol``) or as a pair of crossings hiding
    inside one mesh cell (refined minimum changes sign), whichever comes
    first.  Tangential root locations are accurate to about sqrt(machine
    epsilon) rather than ``tol``, since only |p| is observable there.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    c = np.asarray(coeffs, dtype=float)
    e = np.asarray(exps, dtype=float)
    if c.size == 0:
        raise ValueError("polynomial is identically zero")

    if scan_points is None:
        n = int(math.ceil(scan_bound / math.sqrt(tol)))
        n = min(max(n, _MIN_SCAN_POINTS), _MAX_SCAN_POINTS)
    else:
        n = max(int(scan_points), _MIN_SCAN_POINTS)

    scalar = lambda x: _terms_eval_scalar(c, e, x)
    step = scan_bound / n
    s0 = _sign_at_zero_plus(c, e)
    prev_x = 0.0
    prev_v = s0  # sign carrier only; magnitude unused
    prev_abs = math.inf
    prev2_abs = math.inf

    # (lo, hi) golden-section brackets for candidate tangential roots
    dips: list[tuple[float, float]] = []
    crossing: Optional[tuple[float, float, float]] = None  # lo, flo, hi

    start = 1
    while start <= n and crossing is None:
        stop = min(start + _CHUNK, n + 1)
        xs = step * np.arange(start, stop)
        vs = _terms_eval_chunk(c, e, xs)
        for x, v in zip(xs.tolist(), vs.tolist()):
            if v == 0.0:
                return x
            if (v > 0) != (prev_v > 0):
                # prev_v is only a sign carrier at prev_x == 0; bisection
                # never evaluates at the bracket ends, so that is enough.
                crossing = (prev_x, prev_v, x)
                break
            av = abs(v)
            if prev2_abs > prev_abs < av and prev_x - step > 0:
                dips.append((prev_x - step, x))
            prev2_abs, prev_abs = prev_abs, av
            prev_x, prev_v = x, v
        start = stop

    def resolve_dip(lo: float, hi: float) -> Optional[float]:
        """Refine a local minimum of |p|: either a tangential root, or a
        close pair of crossings hiding between mesh points."""
        sgn = 1.0 if s0 > 0 else -1.0
        xmin, fmin = _golden_min(lambda x: sgn * scalar(x), lo, hi)
        if fmin < 0.0:
            # the dip crosses zero: bisect down to the first crossing
            return _bisect_root(scalar, lo, sgn, xmin, tol)
        if abs(fmin) < tol:
            return xmin
        return None

    limit = crossing[0] if crossing is not None else scan_bound
    for lo, hi in dips:
        if lo >= limit:
            break
        hit = resolve_dip(lo, hi)
        if hit is not None:
            return hit
    # trailing mesh minimum at the right edge (e.g. a double root at the bound)
    if crossing is None and prev_abs <= prev2_abs and prev_x > 0:
        hit = resolve_dip(max(prev_x - 2 * step, step / 2), scan_bound)
        if hit is not None:
            return hit

    if crossing is None:
        return None
    lo, flo, hi = crossing
    return _bisect_root(scalar, lo, flo, hi, tol)


def smallest_positive_root(
    p: ExpPoly,
    tol: float = DEFAULT_TOL,
    scan_bound: float = 1.0 + 1e-6,
    scan_points: Optional[int] = None,
) -> Optional[float]:
    """Smallest positive root of an ExpPoly in ``(0, scan_bound]``, or None."""
    if p.is_zero:
        raise ValueError("polynomial is identically zero")
    return smallest_positive_root_terms(
        [c for c, _ in p.terms],
        [e for _, e in p.terms],
        tol=tol,
        scan_bound=scan_bound,
        scan_points=scan_points,
    )


def _intpoly_sign(pairs: list[tuple[int, int]], x: float) -> float:
    """Sign of ``sum c x**e`` at ``x > 0``, computed in log space.

    Normalizing by the dominant term keeps the evaluation finite for sparse
    high-degree polynomials (degree 2000 at x near 1.4 overflows naively).
    """
    lx = math.log(x)
    m = max(e * lx for e, _ in pairs)
    s = math.fsum(c * math.exp(e * lx - m) for e, c in pairs)
    return s


def largest_positive_root(
    p: IntPoly, tol: float = DEFAULT_TOL, scan_points: int = 4096
) -> float:
    """Largest positive real root of an integer polynomial.

    Scans ``(0, R]`` where ``R`` is the Cauchy root bound, takes the
    topmost sign change, and bisects it to ``tol``.  Raises
    ``NoPositiveRootError`` when the sign analysis finds no positive root
    (tangential positive roots without a sign change are not detected).
    """
    if p.is_zero:
        raise NoPositiveRootError("zero polynomial")
    pairs = [(e, c) for e, c in enumerate(p.coeffs) if c]
    lead = p.coeffs[-1]
    bound = 1.0 + max(abs(c) for c in p.coeffs) / abs(lead) + 1e-9

    f = lambda x: _intpoly_sign(pairs, x)
    n = max(int(scan_points), 16)
    step = bound / n
    xs = step * np.arange(1, n + 1)
    # vectorized log-space evaluation, normalized by the dominant term so
    # that sparse high-degree polynomials stay finite
    e_arr = np.array([e for e, _ in pairs], dtype=float)
    c_arr = np.array([c for _, c in pairs], dtype=float)
    logs = np.log(xs)[:, None] * e_arr[None, :]
    vals = (np.exp(logs - logs.max(axis=1, keepdims=True)) * c_arr).sum(axis=1)
    signs = vals.tolist()
    signs.append(float(lead))  # beyond the Cauchy bound the leading term wins

    for i in range(n - 1, -1, -1):
        v = signs[i]
        if v == 0.0:
            return float(xs[i])
        if (v > 0) != (signs[i + 1] > 0):
            return _bisect_root(f, float(xs[i]), v, float(xs[i]) + step, tol)
    raise NoPositiveRootError("no positive root found by sign analysis")
