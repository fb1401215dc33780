"""Forward triangle geometry: sides to angles, areas, medians, altitudes, bisectors.

Labels follow the usual convention: side ``a = BC`` is opposite vertex A,
``b = AC`` opposite B, ``c = AB`` opposite C. Lengths are floats; the
``*_hp`` helpers repeat the computation in mpmath at a chosen number of
decimal digits and serve as oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

Number = Union[float, int, Fraction]

# Relative margin by which the longest side must fall short of the sum of the others.
DEGENERACY_SLACK = 1e-12


class InvalidTriangle(ValueError):
    pass


class InvalidMedians(ValueError):
    pass


class InvalidAltitudes(ValueError):
    pass


class NonPositiveInput(ValueError):
    pass


def _check_sides(a: float, b: float, c: float) -> None:
    if not all(math.isfinite(x) and x > 0 for x in (a, b, c)):
        raise InvalidTriangle(f"sides must be positive and finite, got {(a, b, c)}")
    lo, mid, hi = sorted((a, b, c))
    if lo + mid - hi <= DEGENERACY_SLACK * hi:
        raise InvalidTriangle(f"sides {(a, b, c)} violate the strict triangle inequality")


@dataclass(frozen=True)
class Triangle:
    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, float(getattr(self, name)))
        _check_sides(self.a, self.b, self.c)

    @property
    def sides(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def scaled(self, k: float) -> "Triangle":
        return Triangle(k * self.a, k * self.b, k * self.c)

    def metrics(self) -> "Metrics":
        return metrics(self.a, self.b, self.c)


@dataclass(frozen=True)
class Metrics:
    p: float
    S: float
    r: float
    alpha: float
    beta: float
    gamma: float
    m_a: float
    m_b: float
    m_c: float
    h_a: float
    h_b: float
    h_c: float
    l_a: float
    l_b: float
    l_c: float

    def as_dict(self) -> dict[str, float]:
        return dict(self.__dict__)


@dataclass(frozen=True)
class SymmetricInvariants:
    """Symmetric functions of the reciprocal bisector lengths.

    ``a2`` is the sum of 1/l_i^2, ``a3`` the product of 1/l_i and ``a4`` the
    sum of pairwise products of 1/l_i^2. Exact Fractions for rational input.
    """

    a2: Number
    a3: Number
    a4: Number

    def as_tuple(self):
        return (self.a2, self.a3, self.a4)


def area_heron(a: float, b: float, c: float) -> float:
    """Heron's area in Kahan's cancellation-safe ordering."""
    _check_sides(a, b, c)
    a, b, c = sorted((a, b, c), reverse=True)
    # Parentheses are load-bearing: a >= b >= c.
    prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    return 0.25 * math.sqrt(prod)


def area_heron_hp(a, b, c, digits: int = 50) -> mpmath.mpf:
    """Plain Heron formula evaluated with ``digits`` decimal digits."""
    with mpmath.workdps(digits):
        a, b, c = (mpmath.mpf(x) for x in (a, b, c))
        p = (a + b + c) / 2
        return +mpmath.sqrt(p * (p - a) * (p - b) * (p - c))


def semiperimeter(a: float, b: float, c: float) -> float:
    return (a + b + c) / 2


def tangent_lengths(a: float, b: float, c: float) -> tuple[float, float, float]:
    """(p - a, p - b, p - c) without the cancellation of p - x on thin triangles."""
    order = sorted(range(3), key=lambda i: (a, b, c)[i], reverse=True)
    x, y, z = ((a, b, c)[i] for i in order)
    # x >= y >= z; only p - x is at risk, and z - (x - y) is exact in Kahan's sense.
    vals = ((z - (x - y)) / 2, ((x - y) + z) / 2, ((x - z) + y) / 2)
    out = [0.0, 0.0, 0.0]
    for i, v in zip(order, vals):
        out[i] = v
    return tuple(out)


def medians(a: float, b: float, c: float) -> tuple[float, float, float]:
    _check_sides(a, b, c)
    return (
        0.5 * math.sqrt(2 * b * b + 2 * c * c - a * a),
        0.5 * math.sqrt(2 * a * a + 2 * c * c - b * b),
        0.5 * math.sqrt(2 * a * a + 2 * b * b - c * c),
    )


def _reciprocal_heron_product(x: float, y: float, z: float) -> float:
    # 16 * Heron(x, y, z)^2 in Kahan ordering; negative when x, y, z fail the triangle inequality.
    x, y, z = sorted((x, y, z), reverse=True)
    return (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))


def area_from_medians(m_a: float, m_b: float, m_c: float) -> float:
    """S = (1/3) sqrt((sum m)(m_a+m_b-m_c)(m_b+m_c-m_a)(m_c+m_a-m_b))."""
    if min(m_a, m_b, m_c) <= 0:
        raise InvalidMedians("medians must be positive")
    prod = _reciprocal_heron_product(m_a, m_b, m_c)
    if prod <= 0:
        raise InvalidMedians(f"medians {(m_a, m_b, m_c)} do not form a triangle")
    return math.sqrt(prod) / 3


def altitudes(a: float, b: float, c: float) -> tuple[float, float, float]:
    S = area_heron(a, b, c)
    return (2 * S / a, 2 * S / b, 2 * S / c)


def area_from_altitudes(h_a: float, h_b: float, h_c: float) -> float:
    """Invert 1/S = sqrt(prod of the Heron-style factors in 1/h_i)."""
    if min(h_a, h_b, h_c) <= 0:
        raise InvalidAltitudes("altitudes must be positive")
    prod = _reciprocal_heron_product(1 / h_a, 1 / h_b, 1 / h_c)
    if prod <= 0:
        raise InvalidAltitudes(f"reciprocal altitudes of {(h_a, h_b, h_c)} do not form a triangle")
    return 1 / math.sqrt(prod)


def angles(a: float, b: float, c: float) -> tuple[float, float, float]:
    """Interior angles in radians, opposite a, b, c.

    Uses the half-angle tangent form tan(A/2) = r / (p - a), which stays
    accurate for needle-shaped triangles where acos loses digits.
    """
    _check_sides(a, b, c)
    p = (a + b + c) / 2
    r = area_heron(a, b, c) / p
    return tuple(2 * math.atan2(r, t) for t in tangent_lengths(a, b, c))


def _bisector_side_form(b, c, p, pa):
    return 2 / (b + c) * math.sqrt(b * c * p * pa)


def bisector_angle_form(p: float, alpha: float, beta: float, gamma: float) -> float:
    """Bisector from the vertex with angle ``alpha``: 2p sin(b/2) sin(g/2) / (cos(a/2) cos((b-g)/2))."""
    return (
        2 * p * math.sin(beta / 2) * math.sin(gamma / 2)
        / (math.cos(alpha / 2) * math.cos((beta - gamma) / 2))
    )


def bisectors_side_form(a: float, b: float, c: float) -> tuple[float, float, float]:
    _check_sides(a, b, c)
    p = (a + b + c) / 2
    ta, tb, tc = tangent_lengths(a, b, c)
    return (
        _bisector_side_form(b, c, p, ta),
        _bisector_side_form(c, a, p, tb),
        _bisector_side_form(a, b, p, tc),
    )


def bisectors(a: float, b: float, c: float, *, cross_check: bool = False) -> tuple[float, float, float]:
    """Internal bisector lengths (l_a, l_b, l_c) via the half-angle formula.

    With ``cross_check`` the side-length formula is evaluated too and a
    disagreement beyond 1e-12 relative raises ``ArithmeticError``. Off by
    default: on needle triangles the two float routes can drift apart by
    more than that.
    """
    _check_sides(a, b, c)
    p = (a + b + c) / 2
    al, be, ga = angles(a, b, c)
    out = (
        bisector_angle_form(p, al, be, ga),
        bisector_angle_form(p, be, ga, al),
        bisector_angle_form(p, ga, al, be),
    )
    if cross_check:
        for x, y in zip(out, bisectors_side_form(a, b, c)):
            if abs(x - y) > 1e-12 * abs(y):
                raise ArithmeticError(f"bisector routes disagree: {x!r} vs {y!r}")
    return out


def inradius(a: float, b: float, c: float) -> float:
    return area_heron(a, b, c) / semiperimeter(a, b, c)


def metrics(a: float, b: float, c: float) -> Metrics:
    _check_sides(a, b, c)
    p = semiperimeter(a, b, c)
    S = area_heron(a, b, c)
    al, be, ga = angles(a, b, c)
    ma, mb, mc = medians(a, b, c)
    ha, hb, hc = altitudes(a, b, c)
    la, lb, lc = bisectors(a, b, c, cross_check=False)
    return Metrics(p, S, S / p, al, be, ga, ma, mb, mc, ha, hb, hc, la, lb, lc)


def symmetric_invariants(l_a: Number, l_b: Number, l_c: Number) -> SymmetricInvariants:
    """(a2, a3, a4) from bisector lengths; exact when all three are ints/Fractions."""
    ls = (l_a, l_b, l_c)
    if any(x <= 0 for x in ls):
        raise NonPositiveInput(f"bisector lengths must be positive, got {ls}")
    if all(isinstance(x, (int, Fraction)) for x in ls):
        inv = [1 / Fraction(x) for x in ls]
    else:
        inv = [1 / float(x) for x in ls]
    sq = [x * x for x in inv]
    return SymmetricInvariants(
        a2=sq[0] + sq[1] + sq[2],
        a3=inv[0] * inv[1] * inv[2],
        a4=sq[0] * sq[1] + sq[1] * sq[2] + sq[2] * sq[0],
    )


def vrf_residuals(tri: Triangle) -> tuple[float, float]:
    """Relative residuals of the two incircle relations tying r, S, p to (a2, a3).

    res1 checks 4 a2 r^2 S^2 - 8 a3 r^3 S^2 = r^4 + S^2,
    res2 checks 4 a2 r^2 p^2 - 8 a3 r^3 p^2 = r^2 + p^2,
    each as |LHS - RHS| / |RHS|.
    """
    m = tri.metrics()
    inv = symmetric_invariants(m.l_a, m.l_b, m.l_c)
    r, S, p = m.r, m.S, m.p
    rhs1 = r**4 + S**2
    lhs1 = 4 * inv.a2 * r**2 * S**2 - 8 * inv.a3 * r**3 * S**2
    rhs2 = r**2 + p**2
    lhs2 = 4 * inv.a2 * r**2 * p**2 - 8 * inv.a3 * r**3 * p**2
    return abs(lhs1 - rhs1) / abs(rhs1), abs(lhs2 - rhs2) / abs(rhs2)
