"""Minimum of the h-th largest coordinate over a power-sum constrained set.

The feasible set holds non-increasing vectors in R_+^{n-1} with coordinate
sum ``n`` and p-th power sum ``b``. Minimizing coordinate ``h`` over it gives
a lower bound for the h-th largest normalized-Laplacian eigenvalue when
``b`` is the p-th spectral moment. For ``p = 2`` and ``h`` in {1, 2} the
optimum has closed forms (``q_closed_form``, ``r_closed_form``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from salpha.errors import DegenerateB, Infeasible, InfeasibleB, NoSignChange

DEGENERATE_RTOL = 1e-12
BISECT_MAX_ITER = 200

CASE_DEGENERATE = "degenerate"
CASE_H1 = "h_equal_1"
CASE_MID = "h_mid"
CASE_BEYOND = "h_beyond"


@dataclass(frozen=True)
class MajorizationInstance:
    n: int
    b: float
    p: int = 2
    h: int = 1


@dataclass(frozen=True)
class SolverResult:
    delta_star: float
    case_tag: str
    bracket: tuple[float, float]
    residual: float


def _b_min(n: int, p: int) -> float:
    # power-sum at the all-equal vector n/(n-1)
    return n**p / (n - 1) ** (p - 1)


def is_degenerate(n: int, b: float, p: int = 2) -> bool:
    bmin = _b_min(n, p)
    return abs(b - bmin) <= DEGENERATE_RTOL * bmin


def _check_feasible(n: int, b: float, p: int) -> None:
    if not isinstance(p, int) or p < 2:
        raise Infeasible(f"p must be an integer >= 2, got {p!r}")
    if n < 2:
        raise Infeasible(f"n must be >= 2, got {n}")
    if not math.isfinite(b):
        raise InfeasibleB(f"b must be finite, got {b}")
    bmin = _b_min(n, p)
    if b < bmin * (1 - DEGENERATE_RTOL) or b >= n**p:
        raise InfeasibleB(f"b={b!r} outside [{bmin!r}, {n**p}) for n={n}, p={p}")


def h_star(n: int, b: float, p: int = 2) -> int:
    """The integer k with ``n^p/(k+1)^(p-1) < b <= n^p/k^(p-1)``.

    Starts from ``floor((n^p/b)^(1/(p-1)))`` and corrects by one step at a
    time against the bracketing inequality, so floating-point misrounding at
    exact boundaries cannot shift the answer.
    """
    _check_feasible(n, b, p)
    if is_degenerate(n, b, p):
        raise DegenerateB(f"b={b!r} equals n^p/(n-1)^(p-1); optimum is n/(n-1)")
    npow = n**p
    k = max(1, math.floor((npow / b) ** (1.0 / (p - 1)) * (1 + DEGENERATE_RTOL)))

    def upper(j: int) -> float:
        return npow / j ** (p - 1)

    while k > 1 and b > upper(k):
        k -= 1
    while b <= upper(k + 1):
        k += 1
    if not (upper(k + 1) < b <= upper(k)):
        raise InfeasibleB(f"no bracketing integer for b={b!r}")  # pragma: no cover
    return k


def bisect(
    f: Callable[[float], float], lo: float, hi: float, xtol: float, max_iter: int = BISECT_MAX_ITER
) -> float:
    """Root of ``f`` on ``[lo, hi]`` given a sign change at the endpoints.

    Stops when the bracket is narrower than ``xtol`` or cannot be split in
    floating point, and returns the endpoint with the smaller ``|f|``.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoSignChange(f"f({lo!r})={flo!r} and f({hi!r})={fhi!r} share a sign")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo < xtol or mid in (lo, hi):
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return lo if abs(flo) <= abs(fhi) else hi


def f_top(delta: float, n: int, b: float, p: int, hs: int) -> float:
    """``hs`` coordinates at delta, one at ``n - hs*delta``, the rest zero."""
    return hs * delta**p + (n - hs * delta) ** p - b


def f_inner(delta: float, n: int, b: float, p: int, h: int) -> float:
    """``n-h`` coordinates at delta, ``h-1`` sharing the remaining mass."""
    return (n - h) * delta**p + (n - (n - h) * delta) ** p / (h - 1) ** (p - 1) - b


def solve_min_lambda(inst: MajorizationInstance, method: str = "auto") -> SolverResult:
    """Minimize coordinate ``inst.h`` over the constrained set.

    ``method="auto"`` uses the closed forms for ``p = 2, h in {1, 2}`` and
    bisection otherwise; ``method="bisect"`` always bisects.
    """
    n, b, p, h = inst.n, inst.b, inst.p, inst.h
    _check_feasible(n, b, p)
    # h > n-1 is allowed and lands in the zero case, since h* <= n-2
    if h < 1:
        raise Infeasible(f"h must be >= 1, got {h}")
    if method not in ("auto", "bisect"):
        raise ValueError(f"unknown method {method!r}")

    if is_degenerate(n, b, p):
        d = n / (n - 1)
        return SolverResult(d, CASE_DEGENERATE, (d, d), 0.0)

    hs = h_star(n, b, p)
    # bisect down to float resolution: f'(delta) grows like n^p, so an
    # interval-width stop leaves residuals that scale with n
    xtol = 0.0
    widen = 1e-12 * n

    if h == 1:
        lo, hi = n / (hs + 1), n / hs
        f = lambda d: f_top(d, n, b, p, hs)  # noqa: E731
        if method == "auto" and p == 2:
            root = q_closed_form(n, b)
        else:
            # interval is open at lo; widen, then clamp the root back below
            root = bisect(f, lo - widen, hi, xtol)
        root = min(max(root, lo), hi)
        return SolverResult(root, CASE_H1, (lo, hi), abs(f(root)))

    if h <= hs + 1:
        lo, hi = 0.0, n / (n - 1)
        f = lambda d: f_inner(d, n, b, p, h)  # noqa: E731
        if method == "auto" and p == 2 and h == 2:
            root = r_closed_form(n, b)
        else:
            root = bisect(f, lo, hi, xtol)
        root = min(max(root, lo), hi)
        return SolverResult(root, CASE_MID, (lo, hi), abs(f(root)))

    return SolverResult(0.0, CASE_BEYOND, (0.0, 0.0), 0.0)


def q_closed_form(n: int, b: float) -> float:
    """Minimum of the largest coordinate for ``p = 2``."""
    _check_feasible(n, b, 2)
    if is_degenerate(n, b, 2):
        raise DegenerateB("complete-graph moment; the optimum is n/(n-1)")
    hs = h_star(n, b, 2)
    rad = max(b * (hs + 1) - n * n, 0.0) / hs
    return (n + math.sqrt(rad)) / (1 + hs)


def r_closed_form(n: int, b: float) -> float:
    """Minimum of the second largest coordinate for ``p = 2`` (needs n >= 3)."""
    if n < 3:
        raise Infeasible(f"second coordinate needs n >= 3, got {n}")
    _check_feasible(n, b, 2)
    if is_degenerate(n, b, 2):
        return n / (n - 1)
    # b within rounding of the lower limit can make the radicand a tiny negative
    rad = max(b * (n - 1) - n * n, 0.0) / (n - 2)
    return (n - math.sqrt(rad)) / (n - 1)
