import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import minimize

from salpha import MajorizationInstance, h_star, q_closed_form, r_closed_form, solve_min_lambda
from salpha.errors import DegenerateB, Infeasible, InfeasibleB, NoSignChange
from salpha.majorization import CASE_BEYOND, CASE_DEGENERATE, CASE_H1, CASE_MID, bisect

# Frozen from independent oracles:
#  n=4, p=2: dense enumeration of the circle {sum = 4, sum of squares = b} in R^3
#  p=3 and n=6: multistart SLSQP on min x_h s.t. sum, power sum, ordering, x >= 0
ORACLE = {
    (4, 6.5, 2, 1): 1.7742918851774319,
    (4, 6.5, 2, 2): 0.8923747814892349,
    (4, 35 / 6, 2, 1): 1.6220084679281461,
    (4, 35 / 6, 2, 2): 1.0446581987385204,
    (4, 11.5, 3, 1): 1.7875304506477745,
    (6, 20.0, 3, 2): 0.8504489607445966,
    (6, 9.0, 2, 3): 0.7101020514433511,
    (6, 9.0, 2, 1): 1.5,
}


def random_feasible_b(rng, n, p=2):
    lo = n**p / (n - 1) ** (p - 1)
    return lo + (n**p - lo) * rng.uniform(1e-9, 1 - 1e-9)


def test_h_star_examples():
    assert h_star(4, 6.5, 2) == 2
    assert h_star(4, 11.5, 3) == 2
    with pytest.raises(DegenerateB):
        h_star(4, 16 / 3, 2)


@pytest.mark.parametrize("b", [5.0, 16.0, 100.0, float("nan")])
def test_h_star_infeasible(b):
    with pytest.raises(InfeasibleB):
        h_star(4, b, 2)


def test_h_star_exact_boundaries():
    # b = n^2/k exactly: the bracket is closed on the right, so h* = k
    for n in range(4, 40):
        for k in range(2, n - 1):
            assert h_star(n, n * n / k, 2) == k


@settings(max_examples=300, deadline=None)
@given(n=st.integers(3, 200), p=st.integers(2, 5), u=st.floats(1e-9, 1 - 1e-9))
def test_h_star_brackets(n, p, u):
    lo = n**p / (n - 1) ** (p - 1)
    b = lo + (n**p - lo) * u
    if abs(b - lo) <= 1e-12 * lo:
        return
    k = h_star(n, b, p)
    assert 1 <= k < n - 1
    assert n**p / (k + 1) ** (p - 1) < b <= n**p / k ** (p - 1)


@pytest.mark.parametrize("key", sorted(ORACLE))
def test_solver_matches_oracle(key):
    n, b, p, h = key
    for method in ("auto", "bisect"):
        res = solve_min_lambda(MajorizationInstance(n, b, p, h), method=method)
        assert res.delta_star == pytest.approx(ORACLE[key], abs=1e-9)
        assert res.residual < 1e-10 * b


def test_solver_cases():
    assert solve_min_lambda(MajorizationInstance(4, 6.5, 2, 1)).case_tag == CASE_H1
    assert solve_min_lambda(MajorizationInstance(4, 6.5, 2, 2)).case_tag == CASE_MID
    res = solve_min_lambda(MajorizationInstance(4, 6.5, 2, 4))
    assert res.case_tag == CASE_BEYOND and res.delta_star == 0.0
    res = solve_min_lambda(MajorizationInstance(5, 25 / 4, 2, 3))
    assert res.case_tag == CASE_DEGENERATE and res.delta_star == 1.25


def test_solver_p3_spot():
    res = solve_min_lambda(MajorizationInstance(4, 11.5, 3, 1))
    assert 4 / 3 < res.delta_star <= 2
    assert res.delta_star <= 2.0  # lambda_1(P4) = 2


def test_solver_rejects():
    with pytest.raises(Infeasible):
        solve_min_lambda(MajorizationInstance(4, 6.5, 2, 0))
    with pytest.raises(Infeasible):
        solve_min_lambda(MajorizationInstance(4, 6.5, 1, 1))
    with pytest.raises(InfeasibleB):
        solve_min_lambda(MajorizationInstance(4, 4.0, 2, 1))


def test_bisect_no_sign_change():
    with pytest.raises(NoSignChange):
        bisect(lambda x: x * x + 1, -1.0, 1.0, 1e-12)


def test_beyond_case_by_brute_force():
    # n=6, b=9: h* = 4, so h = 5 (= n-1) is not beyond; SLSQP check of the h_mid
    # root for h = 5 and the zero for a sparse-support instance
    res = solve_min_lambda(MajorizationInstance(6, 30.0, 2, 3))
    assert h_star(6, 30.0, 2) == 1
    assert res.case_tag == CASE_BEYOND and res.delta_star == 0.0
    # a feasible vector with x_3 = 0 exists: (a, c, 0, 0, 0) with a + c = 6, a^2 + c^2 = 30
    c = (6 - math.sqrt(36 - 2 * (36 - 30))) / 2
    a = 6 - c
    assert a >= c >= 0 and a * a + c * c == pytest.approx(30.0)


def test_q_examples():
    assert q_closed_form(4, 6.5) == pytest.approx(1.7743, abs=5e-5)
    assert q_closed_form(4, 35 / 6) == pytest.approx(1.6220, abs=5e-5)
    with pytest.raises(DegenerateB):
        q_closed_form(4, 16 / 3)


@pytest.mark.parametrize("n", [3, 4, 7, 20, 100])
def test_q_continuous_at_complete_limit(n):
    b = n * n / (n - 1) * (1 + 1e-10)
    assert q_closed_form(n, b) == pytest.approx(n / (n - 1), abs=1e-4)


def test_r_examples():
    assert r_closed_form(4, 6.5) == pytest.approx(0.8924, abs=5e-5)
    assert r_closed_form(4, 35 / 6) == pytest.approx(1.0447, abs=5e-5)
    for n in range(3, 30):
        assert r_closed_form(n, n * n / (n - 1)) == pytest.approx(n / (n - 1), abs=1e-12)
    with pytest.raises(InfeasibleB):
        r_closed_form(4, 20.0)


def test_q_in_theorem_interval():
    rng = np.random.default_rng(1)
    for _ in range(2000):
        n = int(rng.integers(3, 300))
        b = random_feasible_b(rng, n)
        k = h_star(n, b)
        q = q_closed_form(n, b)
        assert n / (k + 1) < q <= n / k + 1e-15


def _slsqp_min(n, b, p, h, starts, seed):
    rng = np.random.default_rng(seed)
    k = n - 1
    cons = [
        {"type": "eq", "fun": lambda x: x.sum() - n},
        {"type": "eq", "fun": lambda x: (x**p).sum() - b},
    ] + [{"type": "ineq", "fun": (lambda x, i=i: x[i] - x[i + 1])} for i in range(k - 1)]
    best = np.inf
    for _ in range(starts):
        x0 = -np.sort(-rng.dirichlet(np.ones(k)) * n)
        res = minimize(lambda x: x[h - 1], x0, constraints=cons, bounds=[(0, n)] * k,
                       method="SLSQP", options={"ftol": 1e-12, "maxiter": 200})
        if res.success and abs(res.x.sum() - n) < 1e-8 and abs((res.x**p).sum() - b) < 1e-8:
            best = min(best, res.x[h - 1])
    return best


@pytest.mark.parametrize("seed", range(6))
def test_solver_matches_numerical_optimum(seed):
    rng = np.random.default_rng(100 + seed)
    n = int(rng.integers(4, 8))
    p = int(rng.integers(2, 4))
    b = random_feasible_b(rng, n, p)
    for h in (1, 2):
        found = _slsqp_min(n, b, p, h, starts=12, seed=seed)
        exact = solve_min_lambda(MajorizationInstance(n, b, p, h), method="bisect").delta_star
        assert np.isfinite(found)
        # a feasible point found numerically can never beat the true minimum
        assert exact <= found + 1e-9
        assert found == pytest.approx(exact, abs=1e-7)


def test_r_le_complete_value_le_q():
    rng = np.random.default_rng(5)
    for _ in range(5000):
        n = int(rng.integers(3, 500))
        b = random_feasible_b(rng, n)
        r, q = r_closed_form(n, b), q_closed_form(n, b)
        assert r <= n / (n - 1) + 1e-12
        assert n / (n - 1) <= n / h_star(n, b) + 1e-12
        assert r <= q


def test_double_localization_mass_condition_never_holds():
    # the vector attaining R has largest entry n - (n-2)R, which is >= Q
    rng = np.random.default_rng(9)
    for _ in range(5000):
        n = int(rng.integers(4, 500))
        b = random_feasible_b(rng, n)
        assert q_closed_form(n, b) + r_closed_form(n, b) * (n - 2) <= n + 1e-9


def test_q_monotone_in_b_within_segments():
    for n in (4, 7, 10, 25):
        for k in range(1, n - 1):
            lo, hi = n * n / (k + 1), n * n / k
            bs = np.linspace(lo, hi, 52)[1:-1]
            bs = bs[(bs > n * n / (n - 1)) & (bs < n * n)]
            qs = [q_closed_form(n, b) for b in bs]
            assert np.all(np.diff(qs) > 0)
