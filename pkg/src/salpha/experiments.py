"""Table rows and curve samples, with fixed CSV formatting."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from salpha.bounds import THETA_P, BoundReport, bound_report, p_bozkurt
from salpha.graph import Graph, generate_er_connected, generate_random_tree
from salpha.majorization import is_degenerate, q_closed_form

EXPERIMENT_HEADER = (
    "n,d1,m,s_star,bound_t1_theta,bound_t2_theta_beta,bound_t1_p,"
    "err_t1_theta,err_t2_theta_beta,err_t1_p,theta_source,hypotheses_ok,seed"
).split(",")
CURVES_HEADER = ["n", "t", "p", "q", "q_minus_p"]

DEGENERATE_TAG = "degenerate"


def row_seed(base_seed: int, n: int) -> int:
    return base_seed * 1000 + n


def fmt_value(x: float) -> str:
    return f"{x:.6g}"


def fmt_pct(frac: float) -> str:
    return f"{100.0 * frac:.2f}"


@dataclass(frozen=True)
class ExperimentRow:
    n: int
    d1: int
    m: int
    s_star: float
    bound_t1_theta: float | None
    bound_t2_theta_beta: float | None
    bound_t1_p: float | None
    err_t1_theta: float | None
    err_t2_theta_beta: float | None
    err_t1_p: float | None
    theta_source: str
    hypotheses_ok: bool | None
    seed: int | None
    model_tag: str = "named"

    @classmethod
    def from_report(cls, r: BoundReport, seed: int | None, model_tag: str) -> "ExperimentRow":
        if r.complete:
            return cls(r.n, r.d1, r.m, r.exact, None, None, None, None, None, None,
                       DEGENERATE_TAG, None, seed, model_tag)
        t1, t2, tp = r.bounds
        e1, e2, ep = r.relative_errors
        return cls(r.n, r.d1, r.m, r.exact, t1.value, t2.value, tp.value, e1, e2, ep,
                   t1.theta_source, t2.hypotheses_ok, seed, model_tag)

    def csv_fields(self) -> list[str]:
        def v(x):
            return "" if x is None else fmt_value(x)

        def pct(x):
            return "" if x is None else fmt_pct(x)

        hyp = "" if self.hypotheses_ok is None else str(self.hypotheses_ok).lower()
        return [
            str(self.n), str(self.d1), str(self.m), fmt_value(self.s_star),
            v(self.bound_t1_theta), v(self.bound_t2_theta_beta), v(self.bound_t1_p),
            pct(self.err_t1_theta), pct(self.err_t2_theta_beta), pct(self.err_t1_p),
            self.theta_source, hyp, "" if self.seed is None else str(self.seed),
        ]


def generate(model: str, n: int, seed: int, q: float = 0.5) -> Graph:
    if model == "er":
        return generate_er_connected(n, q, seed)
    if model == "tree":
        return generate_random_tree(n, seed)
    raise ValueError(f"unknown model {model!r}")


def experiment_rows(
    model: str,
    sizes: Sequence[int],
    alpha: float,
    seed: int,
    q: float = 0.5,
    bipartite_theta: bool = True,
) -> list[ExperimentRow]:
    rows = []
    for n in sizes:
        if n < 4:
            raise ValueError(f"experiment sizes must be >= 4, got {n}")
        s = row_seed(seed, n)
        report = bound_report(generate(model, n, s, q), alpha, bipartite_theta)
        rows.append(ExperimentRow.from_report(report, s, model))
    return rows


def write_csv(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def experiment_csv(rows: Iterable[ExperimentRow]) -> str:
    return write_csv(EXPERIMENT_HEADER, (r.csv_fields() for r in rows))


# --- curves ---------------------------------------------------------------


@dataclass(frozen=True)
class CurveSample:
    n: int
    t: float
    P: float
    Q: float

    @property
    def diff(self) -> float:
        return self.Q - self.P


def t_grid(n: int, samples: int, spacing: str = "uniform") -> np.ndarray:
    """``samples`` points strictly inside ``(n/(n-1), n)``.

    ``uniform`` spaces them evenly; ``log`` spaces the offsets from the left
    endpoint geometrically, from ``1e-9`` of the interval width upward, to
    resolve the behaviour near the complete-graph limit.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    lo, hi = n / (n - 1), float(n)
    k = np.arange(1, samples + 1)
    if spacing == "uniform":
        frac = k / (samples + 1)
    elif spacing == "log":
        frac = np.logspace(-9, 0, samples) * (samples / (samples + 1))
    else:
        raise ValueError(f"unknown spacing {spacing!r}")
    return lo + (hi - lo) * frac


def curve_samples(n_values: Sequence[int], samples: int, spacing: str = "uniform") -> list[CurveSample]:
    out = []
    for n in n_values:
        if n < 3:
            raise ValueError(f"curves need n >= 3, got {n}")
        for t in t_grid(n, samples, spacing):
            t = float(t)
            b = n + t
            c = n / (n - 1)
            q = c if is_degenerate(n, b) else q_closed_form(n, b)
            out.append(CurveSample(n, t, p_bozkurt(n, t), q))
    return out


def curves_csv(samples: Iterable[CurveSample]) -> str:
    return write_csv(
        CURVES_HEADER,
        ([str(s.n)] + [f"{x:.12g}" for x in (s.t, s.P, s.Q, s.diff)] for s in samples),
    )


def report_text(r: BoundReport) -> str:
    lines = [
        f"n = {r.n}  m = {r.m}  d1 = {r.d1}",
        f"alpha = {r.alpha:g}",
        f"bipartite = {str(r.bipartite).lower()}  complete = {str(r.complete).lower()}",
        f"s*_alpha (exact) = {r.exact:.10g}",
        f"t = {r.t:.10g}  b = {r.b:.10g}  h* = {'-' if r.h_star is None else r.h_star}",
        f"P = {r.P:.10g}  Q = {r.Q:.10g}  R = {r.R:.10g}",
    ]
    if r.complete:
        lines.append("complete graph: P = Q = R = n/(n-1); no bounds emitted")
        return "\n".join(lines) + "\n"
    for bv, err in zip(r.bounds, r.relative_errors):
        label = "theta=P" if bv.theta_source == THETA_P else f"theta={bv.theta_source}"
        if bv.beta_source:
            label += f", beta={bv.beta_source}"
        hyp = "ok" if bv.hypotheses_ok else "violated: " + ", ".join(bv.violated)
        lines.append(
            f"{bv.kind:5s} bound ({'single' if bv.theorem == 1 else 'double'}, {label}) = "
            f"{bv.value:.10g}  rel.err = {100 * err:.4f}%  hypotheses {hyp}"
        )
    return "\n".join(lines) + "\n"
