import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from bisectarea import corpus
from bisectarea.exactmath import PolyQ
from bisectarea.inversesolver import (
    NoConvergence,
    NoRootInRange,
    NonPositiveInput,
    NonPositiveRatio,
    SolverConfig,
    cubic_for_isosceles,
    isosceles_solve,
    solve_all_starts,
    solve_from_bisectors,
)
from bisectarea.trianglecore import area_heron, bisectors


def rel(x, y):
    return abs(x - y) / abs(y)


def _isosceles_oracle():
    # Independent 40-digit solve of 4x^3 - 12x^2 - 3x + 6 = 0 on (0, sqrt(2)/2).
    with mpmath.workdps(40):
        x = mpmath.findroot(lambda x: 4 * x**3 - 12 * x**2 - 3 * x + 6, 0.65)
        beta = 2 * mpmath.asin(x)
        alpha = mpmath.pi - 2 * beta
        return float(x), float(alpha), float(beta), float(mpmath.tan(alpha / 2))


ISO_X, ISO_ALPHA, ISO_BETA, ISO_AREA = _isosceles_oracle()


def test_oracle_values_frozen():
    assert ISO_X == pytest.approx(0.6557915668597601514, abs=1e-15)
    assert ISO_AREA == pytest.approx(0.14126357678041507, abs=1e-15)


def test_equilateral():
    s3 = math.sqrt(3)
    tri = solve_from_bisectors(s3, s3, s3).triangle
    assert tri.sides == pytest.approx((2, 2, 2), rel=1e-12)


def test_three_four_five_round_trip():
    res = solve_from_bisectors(*bisectors(3, 4, 5))
    assert sorted(res.triangle.sides) == pytest.approx([3, 4, 5], rel=1e-12)
    assert res.residual <= 1e-12


def test_isosceles_one_third():
    tri = solve_from_bisectors(1, 1 / 3, 1 / 3).triangle
    assert tri.b == pytest.approx(tri.c, rel=1e-12)
    assert area_heron(*tri.sides) == pytest.approx(ISO_AREA, abs=1e-10)


@pytest.mark.parametrize(
    "rho, expected",
    [
        (Fraction(1, 3), [6, -3, -12, 4]),
        (1, [2, -3, -4, 4]),
        (2, [1, -3, -2, 4]),
    ],
)
def test_cubic_for_isosceles(rho, expected):
    assert cubic_for_isosceles(rho) == PolyQ(expected)


def test_isosceles_solve_matches_oracle():
    sol = isosceles_solve(Fraction(1, 3))
    assert sol.x == pytest.approx(ISO_X, abs=1e-13)
    assert sol.alpha == pytest.approx(ISO_ALPHA, abs=1e-12)
    assert sol.beta == pytest.approx(ISO_BETA, abs=1e-12)
    assert sol.area_factor == pytest.approx(ISO_AREA, abs=1e-12)
    assert abs(math.sin(1.5 * sol.beta) - 6 * math.cos(sol.beta)) <= 1e-12


def test_isosceles_equilateral_ratio():
    sol = isosceles_solve(1)
    assert sol.x == pytest.approx(0.5, abs=1e-13)
    assert sol.alpha == pytest.approx(math.pi / 3, abs=1e-12)


def test_isosceles_errors():
    with pytest.raises(NonPositiveRatio):
        cubic_for_isosceles(0)
    with pytest.raises(NonPositiveRatio):
        isosceles_solve(-1)


def test_isosceles_no_root_reports_cleanly():
    # Scan for a ratio with no sign change; those that have one must solve.
    for k in range(1, 60):
        rho = Fraction(k, 4)
        try:
            sol = isosceles_solve(rho)
        except NoRootInRange:
            continue
        assert 0 < sol.x < math.sqrt(2) / 2
        assert abs(cubic_for_isosceles(rho)(Fraction(sol.x))) < 1e-10


def test_non_positive_input():
    with pytest.raises(NonPositiveInput):
        solve_from_bisectors(1, 0, 1)
    with pytest.raises(NonPositiveInput):
        solve_from_bisectors(1, -2, 1)


@pytest.mark.parametrize(
    "kwargs",
    [{"tolerance": 0}, {"max_iterations": 0}, {"multistart_count": 0}],
)
def test_solver_config_validation(kwargs):
    with pytest.raises(ValueError):
        SolverConfig(**kwargs)


def test_no_convergence_carries_best_residual():
    cfg = SolverConfig(tolerance=1e-300, max_iterations=1, multistart_count=1)
    with pytest.raises(NoConvergence) as info:
        solve_from_bisectors(1, 2, 2.5, cfg)
    assert math.isfinite(info.value.best_residual)


def test_round_trip_congruence():
    for tri in corpus.triangles(101, 300):
        got = solve_from_bisectors(*bisectors(*tri.sides)).triangle
        assert max(rel(g, w) for g, w in zip(sorted(got.sides), sorted(tri.sides))) <= 1e-10


def test_round_trip_existence():
    for ls in corpus.bisector_triples(102, 300):
        got = solve_from_bisectors(*ls).triangle
        assert max(rel(g, w) for g, w in zip(bisectors(*got.sides), ls)) <= 1e-10


log_len = st.floats(min_value=math.log(0.1), max_value=math.log(10)).map(math.exp)


@settings(max_examples=60, deadline=None)
@given(log_len, log_len, log_len, st.sampled_from([1 / 3, 2.0, 10.0]))
def test_scale_equivariance(la, lb, lc, k):
    base = solve_from_bisectors(la, lb, lc).triangle
    scaled = solve_from_bisectors(k * la, k * lb, k * lc).triangle
    for x, y in zip(scaled.sides, base.sides):
        assert rel(x, k * y) <= 1e-10


@settings(max_examples=40, deadline=None)
@given(log_len, log_len, log_len)
def test_converged_starts_agree(la, lb, lc):
    results = [r for r in solve_all_starts(la, lb, lc) if r is not None]
    assert results
    ref = sorted(results[0].triangle.sides)
    for r in results[1:]:
        assert max(rel(g, w) for g, w in zip(sorted(r.triangle.sides), ref)) <= 1e-8
