"""The degree-10 polynomial satisfied by 1/(2r), and the cubic that recovers bisectors.

Everything here is built in exact rational arithmetic from the symmetric
invariants (a2, a3, a4) of the reciprocal bisector lengths.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import PolyQ, RationalLike, is_square, to_rational
from .inversesolver import SolverConfig, solve_from_bisectors
from .trianglecore import inradius, symmetric_invariants


class NonPositiveRoots(ValueError):
    """The invariants do not come from three positive bisector lengths."""


@dataclass(frozen=True)
class WolffData:
    a2: Fraction
    a3: Fraction
    a4: Fraction
    W: PolyQ
    U: PolyQ
    V: PolyQ

    @classmethod
    def from_invariants(cls, a2: RationalLike, a3: RationalLike, a4: RationalLike) -> "WolffData":
        a2, a3, a4 = (to_rational(x) for x in (a2, a3, a4))
        return cls(a2, a3, a4, wolff_polynomial(a2, a3, a4), u_polynomial(a2, a3, a4), v_polynomial(a2, a3, a4))

    @classmethod
    def from_bisectors(cls, l_a, l_b, l_c) -> "WolffData":
        inv = symmetric_invariants(*(to_rational(x) for x in (l_a, l_b, l_c)))
        return cls.from_invariants(*inv.as_tuple())


def wolff_coefficients(a2, a3, a4) -> list:
    """Coefficients of t^0..t^10; works for Fractions and floats alike."""
    h = Fraction(1, 2)
    q = Fraction(1, 4)
    e = Fraction(1, 8)
    s = Fraction(1, 16)
    if isinstance(a2, float) or isinstance(a3, float) or isinstance(a4, float):
        h, q, e, s = 0.5, 0.25, 0.125, 0.0625
    return [
        s * a2**2 * a3**2 - q * a4 * a3**2,
        h * a2 * a3 * a4 - e * a2**3 * a3 + 10 * e * a3**3,
        s * a2**4 - q * a2**2 * a4 - 25 * e * a2 * a3**2,
        5 * h * a2**2 * a3 - q * a4 * a3,
        q * a2 * a4 - 5 * e * a2**3 + 61 * s * a3**2,
        -47 * e * a2 * a3,
        33 * s * a2**2,
        7 * h * a3,
        -5 * h * a2,
        0 * a2,
        1 + 0 * a2,
    ]


def wolff_polynomial(a2: RationalLike, a3: RationalLike, a4: RationalLike) -> PolyQ:
    """Monic degree-10 W(t) whose roots include 1/(2r); the t^9 term vanishes."""
    a2, a3, a4 = (to_rational(x) for x in (a2, a3, a4))
    if min(a2, a3, a4) <= 0:
        raise ValueError("invariants must be positive")
    return PolyQ(wolff_coefficients(a2, a3, a4))


def u_polynomial(a2, a3, a4) -> PolyQ:
    """U(t) = t^3 - a2 t^2 + a4 t - a3^2, with roots 1/l_i^2."""
    a2, a3, a4 = (to_rational(x) for x in (a2, a3, a4))
    return PolyQ([-a3 * a3, a4, -a2, 1])


def v_polynomial(a2, a3, a4) -> PolyQ:
    """V(t) = U(t^2), with roots +-1/l_i."""
    return u_polynomial(a2, a3, a4).compose_square()


def check_incircle_root(l_a, l_b, l_c, tolerance: float = 1e-12) -> float:
    """Normalized |W(1/(2r))| for the triangle solved from the given bisectors.

    The residual is divided by the largest monomial magnitude |c_k t^k|, so
    it measures cancellation relative to the size of the terms.
    """
    res = solve_from_bisectors(l_a, l_b, l_c, SolverConfig(tolerance=tolerance))
    r = inradius(*res.triangle.sides)
    inv = symmetric_invariants(float(l_a), float(l_b), float(l_c))
    coeffs = wolff_coefficients(inv.a2, inv.a3, inv.a4)
    t = 1 / (2 * r)
    terms = [c * t**k for k, c in enumerate(coeffs)]
    return abs(math.fsum(terms)) / max(abs(x) for x in terms)


def cardano_roots(f: PolyQ) -> list[complex]:
    """All three roots of a cubic.

    The depressed cubic's discriminant is classified exactly: three distinct
    real roots use the trigonometric form, a repeated root uses the rational
    closed form, one real root uses Cardano's radicals.
    """
    if f.degree != 3:
        raise ValueError("cardano_roots needs a cubic")
    g = f.monic()
    b, c, d = g[2], g[1], g[0]
    # t = y - b/3 gives y^3 + P y + Q.
    P = c - b * b / 3
    Q = 2 * b**3 / 27 - b * c / 3 + d
    shift = -float(b) / 3
    disc = -4 * P**3 - 27 * Q**2
    if disc > 0:
        Pf, Qf = float(P), float(Q)
        m = 2 * math.sqrt(-Pf / 3)
        arg = 3 * Qf / (Pf * m)
        theta = math.acos(max(-1.0, min(1.0, arg))) / 3
        ys = [m * math.cos(theta - 2 * math.pi * k / 3) for k in range(3)]
        return [complex(y + shift) for y in ys]
    if disc == 0:
        if P == 0:
            return [complex(shift)] * 3
        # Double root -3Q/(2P), simple root 3Q/P; both rational.
        dbl = float(-3 * Q / (2 * P) - b / 3)
        simple = float(3 * Q / P - b / 3)
        return [complex(simple), complex(dbl), complex(dbl)]
    Pf, Qf = float(P), float(Q)
    sq = math.sqrt(Qf * Qf / 4 + Pf**3 / 27)
    # Pick the larger-magnitude branch to avoid cancellation.
    w = -Qf / 2 + (sq if Qf <= 0 else -sq)
    u = math.copysign(abs(w) ** (1 / 3), w)
    v = -Pf / (3 * u) if u else 0.0
    omega = complex(-0.5, math.sqrt(3) / 2)
    ys = [u + v, u * omega + v * omega.conjugate(), u * omega.conjugate() + v * omega]
    return [complex(y) + shift for y in ys]


def _polish_real(f: PolyQ, x: float, steps: int = 3) -> float:
    df = f.derivative()
    fc = [float(c) for c in f.coeffs]
    dc = [float(c) for c in df.coeffs]
    for _ in range(steps):
        fx = dfx = 0.0
        for c in reversed(fc):
            fx = fx * x + c
        for c in reversed(dc):
            dfx = dfx * x + c
        if dfx == 0:
            break
        x -= fx / dfx
    return x


def _exact_root(f: PolyQ, x: float) -> Fraction | None:
    """A rational root of ``f`` near ``x``, if the nearby simple fractions include one."""
    fx = Fraction(x)
    for k in range(1, 13):
        q = fx.limit_denominator(10**k)
        if f(q) == 0:
            return q
    return None


def recover_bisectors(a2, a3, a4) -> tuple:
    """Bisector lengths (ascending) from their symmetric invariants via the roots of U.

    Roots that are rational squares give exact Fraction lengths; the rest
    are floats. Only the positive square root is taken.
    """
    U = u_polynomial(a2, a3, a4)
    # Three positive roots force every coefficient sign; reject early.
    if min(-U[0], U[1], -U[2]) <= 0:
        raise NonPositiveRoots("invariants must all be positive")
    roots = cardano_roots(U)
    out = []
    for z in roots:
        if abs(z.imag) > 1e-9 * max(1.0, abs(z.real)) or z.real <= 0:
            raise NonPositiveRoots(f"U has a root {z} that is not a positive real")
        x = z.real
        if not _is_repeated(roots, z):
            x = _polish_real(U, x)
        q = _exact_root(U, x)
        if q is not None and q > 0 and is_square(q):
            out.append(1 / Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator)))
        elif q is not None and q > 0:
            out.append(1 / math.sqrt(q))
        else:
            out.append(1 / math.sqrt(x))
    return tuple(sorted(out))


def _is_repeated(roots, z) -> bool:
    # Newton polishing is unreliable at a repeated root; skip it there.
    return sum(1 for w in roots if abs(w - z) <= 1e-7 * max(1.0, abs(z))) > 1


def bisectors_from_v(a2, a3, a4) -> list[float]:
    """Real roots of V, i.e. +-1/l_i; provided for cross-checks."""
    out = []
    for z in cardano_roots(u_polynomial(a2, a3, a4)):
        s = cmath.sqrt(z)
        out.extend([s, -s])
    return sorted(w.real for w in out if abs(w.imag) < 1e-9)
