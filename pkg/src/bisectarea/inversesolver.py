"""Recover a triangle from its three internal bisector lengths.

Bisector lengths scale linearly with the triangle, so the two ratios
l_b/l_a and l_c/l_a depend only on the angles. The solver runs damped
Newton on the log-ratios over the angle simplex at unit semiperimeter,
then restores scale from l_a.

Needle-shaped triangles lose digits in gamma = pi - alpha - beta, so the
angle iterate is finally polished in tangent-length coordinates
x = p - a, y = p - b, z = p - c, where no such cancellation occurs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactmath import PolyQ, primitive_part, to_rational
from .trianglecore import NonPositiveInput, Triangle, bisector_angle_form, bisectors_side_form


class NoConvergence(RuntimeError):
    def __init__(self, message: str, best_residual: float = math.inf):
        super().__init__(message)
        self.best_residual = best_residual


class NonPositiveRatio(ValueError):
    pass


class NoRootInRange(ValueError):
    pass


@dataclass(frozen=True)
class SolverConfig:
    tolerance: float = 1e-12
    max_iterations: int = 200
    multistart_count: int = 8
    damping: float = 1.0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.multistart_count < 1:
            raise ValueError("multistart_count must be >= 1")


@dataclass(frozen=True)
class SolveResult:
    triangle: Triangle
    residual: float
    iterations: int
    start_used: int


SIMPLEX_MARGIN = 1e-9
_THIRD = math.pi / 3

# Equilateral first, then near-isosceles and near-degenerate seeds (alpha, beta).
START_GRID = (
    (_THIRD, _THIRD),
    (0.3, (math.pi - 0.3) / 2),
    ((math.pi - 0.3) / 2, 0.3),
    ((math.pi - 0.3) / 2, (math.pi - 0.3) / 2),
    (2.6, 0.27),
    (0.27, 2.6),
    (0.27, 0.27),
    (1.2, 0.6),
)


def _unit_bisectors(alpha: float, beta: float) -> tuple[float, float, float]:
    gamma = math.pi - alpha - beta
    return (
        bisector_angle_form(1.0, alpha, beta, gamma),
        bisector_angle_form(1.0, beta, gamma, alpha),
        bisector_angle_form(1.0, gamma, alpha, beta),
    )


def _ratio_residual(x: tuple[float, float], targets: tuple[float, float]) -> tuple[float, float]:
    la, lb, lc = _unit_bisectors(*x)
    return (math.log(lb / la) - targets[0], math.log(lc / la) - targets[1])


def _project(alpha: float, beta: float) -> tuple[float, float]:
    m = SIMPLEX_MARGIN
    alpha = min(max(alpha, m), math.pi - 2 * m)
    beta = min(max(beta, m), math.pi - 2 * m)
    excess = alpha + beta - (math.pi - m)
    if excess > 0:
        alpha -= excess / 2
        beta -= excess / 2
    return alpha, beta


def _jacobian(x, targets):
    alpha, beta = x
    gamma = math.pi - alpha - beta
    scale = min(alpha, beta, gamma)
    cols = []
    for k in range(2):
        h = 1e-7 * scale
        xp = list(x)
        xm = list(x)
        xp[k] += h
        xm[k] -= h
        fp = _ratio_residual(tuple(xp), targets)
        fm = _ratio_residual(tuple(xm), targets)
        cols.append(((fp[0] - fm[0]) / (2 * h), (fp[1] - fm[1]) / (2 * h)))
    return ((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1]))


def _norm(f) -> float:
    return max(abs(f[0]), abs(f[1]))


def _newton(x0, targets, config: SolverConfig):
    """Damped Newton from ``x0``; returns (x, |F|, iterations)."""
    x = _project(*x0)
    f = _ratio_residual(x, targets)
    fn = _norm(f)
    it = 0
    for it in range(1, config.max_iterations + 1):
        if fn < 1e-15:
            break
        (j11, j12), (j21, j22) = _jacobian(x, targets)
        det = j11 * j22 - j12 * j21
        if det == 0 or not math.isfinite(det):
            break
        dx0 = (-f[0] * j22 + f[1] * j12) / det
        dx1 = (-j11 * f[1] + j21 * f[0]) / det
        lam = config.damping
        improved = False
        for _ in range(60):
            cand = _project(x[0] + lam * dx0, x[1] + lam * dx1)
            fc = _ratio_residual(cand, targets)
            fcn = _norm(fc)
            if fcn < fn:
                improved = True
                break
            lam /= 2
        if not improved:
            break
        x, f, fn = cand, fc, fcn
    return x, fn, it


def _tangent_bisectors(u: float, v: float) -> tuple[float, float, float]:
    # Tangent lengths (1, e^u, e^v); sides a = y + z, b = x + z, c = x + y.
    x, y, z = 1.0, math.exp(u), math.exp(v)
    p = x + y + z
    return (
        2 * math.sqrt((x + z) * (x + y) * p * x) / (2 * x + y + z),
        2 * math.sqrt((y + z) * (x + y) * p * y) / (x + 2 * y + z),
        2 * math.sqrt((y + z) * (x + z) * p * z) / (x + y + 2 * z),
    )


def _tangent_residual(w, targets):
    la, lb, lc = _tangent_bisectors(*w)
    return (math.log(lb / la) - targets[0], math.log(lc / la) - targets[1])


def _polish(alpha: float, beta: float, targets, steps: int = 8):
    """Newton in log tangent-length coordinates, starting from an angle iterate."""
    gamma = math.pi - alpha - beta
    ta, tb, tc = (math.tan(t / 2) for t in (alpha, beta, gamma))
    # p - a is proportional to 1 / tan(alpha / 2).
    w = (math.log(ta / tb), math.log(ta / tc))
    f = _tangent_residual(w, targets)
    fn = _norm(f)
    for _ in range(steps):
        if fn < 1e-16:
            break
        h = 1e-7
        cols = []
        for k in range(2):
            wp, wm = list(w), list(w)
            wp[k] += h
            wm[k] -= h
            fp, fm = _tangent_residual(wp, targets), _tangent_residual(wm, targets)
            cols.append(((fp[0] - fm[0]) / (2 * h), (fp[1] - fm[1]) / (2 * h)))
        j11, j21 = cols[0]
        j12, j22 = cols[1]
        det = j11 * j22 - j12 * j21
        if det == 0 or not math.isfinite(det):
            break
        cand = (
            w[0] + (-f[0] * j22 + f[1] * j12) / det,
            w[1] + (-j11 * f[1] + j21 * f[0]) / det,
        )
        try:
            fc = _tangent_residual(cand, targets)
        except (OverflowError, ValueError):
            break
        if _norm(fc) >= fn:
            break
        w, f, fn = cand, fc, _norm(fc)
    return w


def _triangle_from_tangents(w, l_a: float) -> Triangle:
    k = l_a / _tangent_bisectors(*w)[0]
    x, y, z = k, k * math.exp(w[0]), k * math.exp(w[1])
    return Triangle(y + z, x + z, x + y)


def bisector_mismatch(tri: Triangle, targets) -> float:
    """Largest relative difference between the triangle's bisectors and ``targets``."""
    got = bisectors_side_form(*tri.sides)
    return max(abs(g - t) / t for g, t in zip(got, targets))


def _targets(l_a, l_b, l_c) -> tuple[float, float, float]:
    targets = tuple(float(x) for x in (l_a, l_b, l_c))
    if not all(math.isfinite(t) and t > 0 for t in targets):
        raise NonPositiveInput(f"bisector lengths must be positive, got {targets}")
    return targets


def _attempt(idx: int, targets, config: SolverConfig) -> SolveResult | None:
    log_targets = (math.log(targets[1] / targets[0]), math.log(targets[2] / targets[0]))
    x, _, iters = _newton(START_GRID[idx], log_targets, config)
    try:
        tri = _triangle_from_tangents(_polish(x[0], x[1], log_targets), targets[0])
    except (ValueError, OverflowError, ZeroDivisionError):
        return None
    return SolveResult(tri, bisector_mismatch(tri, targets), iters, idx)


def solve_all_starts(l_a, l_b, l_c, config: SolverConfig | None = None) -> list[SolveResult | None]:
    """One attempt per start seed, in order; None where the attempt broke down.

    Results whose residual exceeds the tolerance are returned too, so callers
    can compare what each seed converged to.
    """
    config = config or SolverConfig()
    targets = _targets(l_a, l_b, l_c)
    return [_attempt(i, targets, config) for i in range(min(config.multistart_count, len(START_GRID)))]


def solve_from_bisectors(l_a, l_b, l_c, config: SolverConfig | None = None) -> SolveResult:
    """Triangle whose internal bisectors are (l_a, l_b, l_c).

    Starts are tried in a fixed order and the first one reaching
    ``config.tolerance`` wins, so results are reproducible.
    """
    config = config or SolverConfig()
    targets = _targets(l_a, l_b, l_c)
    best = math.inf
    for idx in range(min(config.multistart_count, len(START_GRID))):
        res = _attempt(idx, targets, config)
        if res is None:
            continue
        best = min(best, res.residual)
        if res.residual <= config.tolerance:
            return res
    raise NoConvergence(
        f"no start reached tolerance {config.tolerance:g} for bisectors {targets}; best residual {best:.3g}",
        best,
    )


def cubic_for_isosceles(rho) -> PolyQ:
    """Cubic in x = sin(B/2) for the isosceles triangle with l_b = l_c = rho * l_a.

    Comes from rho * (3x - 4x^3) = 2(1 - 2x^2), returned integer-primitive
    with positive leading coefficient.
    """
    rho = to_rational(rho)
    if rho <= 0:
        raise NonPositiveRatio(f"ratio must be positive, got {rho}")
    f = PolyQ([2, -3 * rho, -4, 4 * rho])
    return PolyQ(primitive_part(f)[1])


def _bisect_root(f, lo: float, hi: float, tol: float = 1e-14) -> float:
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class IsoscelesSolution:
    x: float
    alpha: float
    beta: float
    area_factor: float


def isosceles_solve(rho) -> IsoscelesSolution:
    """Half base angle data for the isosceles triangle with bisectors (1, rho, rho).

    ``x`` is sin(beta/2), the root of :func:`cubic_for_isosceles` in
    (0, sin(pi/4)); ``area_factor`` is tan(alpha/2), the area when l_a = 1.
    """
    cubic = cubic_for_isosceles(rho)
    coeffs = [float(c) for c in cubic.coeffs]

    def f(x: float) -> float:
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    lo, hi = 0.0, math.sqrt(0.5)
    if f(lo) * f(hi) >= 0:
        raise NoRootInRange(f"no sign change of {cubic} on (0, sqrt(2)/2) for ratio {rho}")
    x = _bisect_root(f, lo, hi)
    beta = 2 * math.asin(x)
    alpha = math.pi - 2 * beta
    return IsoscelesSolution(x, alpha, beta, math.tan(alpha / 2))
