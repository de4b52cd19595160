"""Upper and lower bounds on s*_alpha from eigenvalue localizations.

Two bound families are provided:

* single localization ``lambda_1 >= theta``::

      theta^a + (n - theta)^a / (n - 2)^(a - 1)

* double localization ``lambda_1 >= theta``, ``lambda_2 >= beta``::

      theta^a + beta^a + (n - theta - beta)^a / (n - 3)^(a - 1)

Both are upper bounds for ``0 < a < 1`` and lower bounds for ``a < 0`` or
``a > 1``. The double-localization bound additionally needs
``theta >= beta``, ``theta + beta (n - 2) > n`` and a non-complete graph;
it is still evaluated when those fail, with the failures recorded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from salpha.errors import (
    BetaExceedsTheta,
    InfeasibleT,
    NotConnected,
    NTooSmall,
    ThetaBetaTooLarge,
    ThetaOutOfRange,
)
from salpha.graph import Graph, classify, degree_sequence, is_connected
from salpha.majorization import h_star, q_closed_form, r_closed_form
from salpha.spectral import check_alpha, degree_pair_sum, graph_spectrum, s_alpha_star

UPPER = "upper"
LOWER = "lower"

THETA_Q = "Q"
THETA_P = "P"
THETA_BIPARTITE = "bipartite_two"

# hypothesis identifiers used in BoundValue.violated
HYP_THETA_GE_BETA = "theta_ge_beta"
HYP_MASS = "theta_plus_beta_n_minus_2_gt_n"


@dataclass(frozen=True)
class BoundValue:
    value: float
    kind: str
    theorem: int
    theta_source: str | None = None
    beta_source: str | None = None
    hypotheses_ok: bool = True
    violated: tuple[str, ...] = ()


@dataclass
class BoundReport:
    n: int
    m: int
    d1: int
    alpha: float
    exact: float
    t: float
    b: float
    h_star: int | None
    P: float
    Q: float
    R: float
    bipartite: bool
    complete: bool
    bounds: list[BoundValue] = field(default_factory=list)

    @property
    def relative_errors(self) -> list[float]:
        return [abs(bv.value - self.exact) / self.exact for bv in self.bounds]

    def bound(self, theorem: int, theta_source: str) -> BoundValue:
        for bv in self.bounds:
            if bv.theorem == theorem and bv.theta_source == theta_source:
                return bv
        raise KeyError((theorem, theta_source))


def bound_kind(alpha: float) -> str:
    check_alpha(alpha)
    return UPPER if 0 < alpha < 1 else LOWER


def p_bozkurt(n: int, t: float) -> float:
    """Prior lower bound ``1 + sqrt(t / (n (n - 1)))`` for lambda_1."""
    if n < 2:
        raise NTooSmall(f"n must be >= 2, got {n}")
    lo = n / (n - 1)
    if not (lo * (1 - 1e-12) <= t < n):
        raise InfeasibleT(f"t={t!r} outside [{lo!r}, {n})")
    return 1.0 + math.sqrt(t / (n * (n - 1)))


def theorem1_bound(n: int, alpha: float, theta: float) -> BoundValue:
    kind = bound_kind(alpha)
    if n < 3:
        raise NTooSmall(f"single-localization bound needs n >= 3, got {n}")
    if not 0 < theta < n:
        raise ThetaOutOfRange(f"theta={theta!r} outside (0, {n})")
    value = theta**alpha + (n - theta) ** alpha / (n - 2) ** (alpha - 1)
    return BoundValue(value, kind, 1)


def theorem2_bound(n: int, alpha: float, theta: float, beta: float) -> BoundValue:
    kind = bound_kind(alpha)
    if n < 4:
        raise NTooSmall(f"double-localization bound needs n >= 4, got {n}")
    if beta > theta:
        raise BetaExceedsTheta(f"beta={beta!r} > theta={theta!r}")
    if not (beta > 0 and theta + beta < n):
        raise ThetaBetaTooLarge(f"need 0 < beta and theta + beta < n; got {theta!r}, {beta!r}")
    value = theta**alpha + beta**alpha + (n - theta - beta) ** alpha / (n - 3) ** (alpha - 1)
    violated = []
    if not theta >= beta:
        violated.append(HYP_THETA_GE_BETA)  # pragma: no cover - rejected above
    if not theta + beta * (n - 2) > n:
        violated.append(HYP_MASS)
    return BoundValue(value, kind, 2, beta_source="R", hypotheses_ok=not violated,
                      violated=tuple(violated))


def bound_report(g: Graph, alpha: float, bipartite_theta: bool = True) -> BoundReport:
    """Exact s*_alpha plus the three bounds for one graph.

    Emits, in order: single localization with the chosen theta, double
    localization with ``(theta, R)``, single localization with ``P``. The
    chosen theta is 2 for bipartite graphs when ``bipartite_theta`` is set,
    otherwise ``Q``. Complete graphs get the exact value only.
    """
    check_alpha(alpha)
    if not is_connected(g):
        raise NotConnected("bound report requires a connected graph")
    if g.n < 4:
        raise NTooSmall(f"bound report needs n >= 4, got {g.n}")
    cls = classify(g)
    scalars = degree_pair_sum(g)
    n, t, b = g.n, scalars.t, scalars.b
    exact = s_alpha_star(graph_spectrum(g), alpha)
    d1 = degree_sequence(g).max_degree

    if cls.complete:
        c = n / (n - 1)
        return BoundReport(n, g.m, d1, alpha, exact, t, b, None, c, c, c,
                           cls.bipartite, True)

    P = p_bozkurt(n, t)
    Q = q_closed_form(n, b)
    R = r_closed_form(n, b)
    report = BoundReport(n, g.m, d1, alpha, exact, t, b, h_star(n, b), P, Q, R,
                         cls.bipartite, False)

    if cls.bipartite and bipartite_theta:
        theta, source = 2.0, THETA_BIPARTITE
    else:
        theta, source = Q, THETA_Q
    t1 = theorem1_bound(n, alpha, theta)
    t2 = theorem2_bound(n, alpha, theta, R)
    tp = theorem1_bound(n, alpha, P)
    report.bounds = [
        BoundValue(t1.value, t1.kind, 1, source),
        BoundValue(t2.value, t2.kind, 2, source, "R", t2.hypotheses_ok, t2.violated),
        BoundValue(tp.value, tp.kind, 1, THETA_P),
    ]
    return report
