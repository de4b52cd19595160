"""Normalized Laplacian, its spectrum, and the power sum s*_alpha."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from salpha.errors import (
    ConvergenceFailure,
    InvalidAlpha,
    UnexpectedZeroEigenvalue,
    ZeroDegreeVertex,
)
from salpha.graph import Graph, classify, is_connected

ZERO_TOL = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending (``values[0]`` is the largest)."""

    values: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values)


@dataclass(frozen=True)
class DerivedScalars:
    """Degree-pair sum ``t = 2 sum_E 1/(d_i d_j)`` and ``b = n + t``."""

    n: int
    t: float
    b: float


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Dense ``I - D^{-1/2} A D^{-1/2}``, symmetric by construction."""
    deg = np.asarray(g.degrees, dtype=float)
    if np.any(deg == 0):
        v = int(np.argmin(deg)) + 1
        raise ZeroDegreeVertex(f"vertex {v} is isolated")
    lap = np.eye(g.n)
    if g.edges:
        idx = np.asarray(g.edges) - 1
        w = -1.0 / np.sqrt(deg[idx[:, 0]] * deg[idx[:, 1]])
        lap[idx[:, 0], idx[:, 1]] = w
        lap[idx[:, 1], idx[:, 0]] = w
    return lap


def spectrum(matrix: np.ndarray) -> Spectrum:
    """All eigenvalues of a symmetric matrix, descending.

    Uses LAPACK's divide-and-conquer symmetric solver. A smallest eigenvalue
    with ``|lambda| < 1e-8`` is set to exactly 0, as is any other value in
    ``(-1e-8, 0)``.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    try:
        w = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    if not np.all(np.isfinite(w)):
        raise ConvergenceFailure("eigensolver returned non-finite values")
    w = w[::-1].copy()
    if abs(w[-1]) < ZERO_TOL:
        w[-1] = 0.0
    w[(w < 0) & (w > -ZERO_TOL)] = 0.0
    return Spectrum(tuple(float(x) for x in w))


def graph_spectrum(g: Graph) -> Spectrum:
    return spectrum(normalized_laplacian(g))


def degree_pair_sum(g: Graph) -> DerivedScalars:
    d = g.degrees
    t = 2.0 * math.fsum(1.0 / (d[u - 1] * d[v - 1]) for u, v in g.edges)
    return DerivedScalars(g.n, t, g.n + t)


def check_alpha(alpha: float) -> None:
    if alpha == 0 or alpha == 1 or not math.isfinite(alpha):
        raise InvalidAlpha(f"alpha must be finite and not 0 or 1, got {alpha}")


def s_alpha_star(s: Spectrum, alpha: float) -> float:
    """Sum of ``lambda_i ** alpha`` over all but the smallest eigenvalue."""
    check_alpha(alpha)
    kept = s.as_array()[:-1]
    if np.any(kept <= ZERO_TOL):
        raise UnexpectedZeroEigenvalue(
            "more than one eigenvalue near zero; graph is not connected"
        )
    return math.fsum(kept**alpha)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    residual: float


def validate_spectrum(s: Spectrum, g: Graph, tol: float = 1e-8) -> list[Check]:
    """Check the standard normalized-Laplacian spectral identities.

    Failures are returned as data. The bipartite check needs ``g`` connected
    and is reported as failed otherwise.
    """
    lam = s.as_array()
    scalars = degree_pair_sum(g)
    n_zero = int(np.sum(np.abs(lam) < tol))
    checks = [
        Check("trace", abs(lam.sum() - g.n) <= tol, float(abs(lam.sum() - g.n))),
        Check(
            "second_moment",
            abs((lam**2).sum() - scalars.b) <= tol,
            float(abs((lam**2).sum() - scalars.b)),
        ),
        Check("max_le_two", lam[0] <= 2.0 + 1e-10, float(max(lam[0] - 2.0, 0.0))),
        Check("min_ge_zero", lam[-1] >= -1e-10, float(max(-lam[-1], 0.0))),
        Check("single_zero", n_zero == 1, float(abs(n_zero - 1))),
    ]
    if is_connected(g):
        bip = classify(g).bipartite
        at_two = abs(lam[0] - 2.0) <= tol
        checks.append(Check("two_iff_bipartite", at_two == bip, float(abs(lam[0] - 2.0))))
    else:
        checks.append(Check("two_iff_bipartite", False, float("nan")))
    return checks
