"""Irreducibility, Frobenius cycle types and symmetric-group certificates over Q.

Everything is deterministic: primes are scanned in increasing order and
the evidence lists come back in that order. "Unknown" and "Inconclusive"
are legitimate answers; nothing here ever claims reducibility or a
smaller Galois group without proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import (
    PolyModP,
    PolyQ,
    discriminant,
    is_prime,
    is_square,
    primes_up_to,
    primitive_part,
    to_rational,
)

DEFAULT_PRIME_BOUND = 500


class NotSquarefree(ValueError):
    pass


class DegreeDropped(ValueError):
    pass


@dataclass(frozen=True)
class CycleType:
    """Degrees of the irreducible factors of f mod p (a Frobenius cycle type)."""

    prime: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    def has_cycle(self, length: int) -> bool:
        return length in self.degrees

    def as_dict(self) -> dict:
        return {"prime": self.prime, "degrees": list(self.degrees)}


@dataclass(frozen=True)
class IrreducibilityVerdict:
    irreducible: bool  # False means "not certified", never "reducible"
    method: str
    witness: str
    cycle_types: tuple[CycleType, ...] = ()

    @property
    def status(self) -> str:
        return "Irreducible" if self.irreducible else "Unknown"

    def as_dict(self) -> dict:
        return {"status": self.status, "method": self.method, "witness": self.witness}


@dataclass(frozen=True)
class GaloisCertificate:
    verdict: str  # SymmetricGroup | ContainsAlternating | Inconclusive
    degree: int
    irreducibility: IrreducibilityVerdict
    cycle_types: tuple[CycleType, ...]
    prime_cycle: CycleType | None
    prime_cycle_length: int | None
    discriminant: Fraction
    discriminant_is_square: bool
    primes_sampled: tuple[int, ...]
    reasoning: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "degree": self.degree,
            "irreducibility": self.irreducibility.as_dict(),
            "prime_cycle": self.prime_cycle.as_dict() if self.prime_cycle else None,
            "prime_cycle_length": self.prime_cycle_length,
            "discriminant": str(self.discriminant),
            "discriminant_is_square": self.discriminant_is_square,
            "primes_sampled": len(self.primes_sampled),
            "cycle_types": [ct.as_dict() for ct in self.cycle_types],
            "reasoning": list(self.reasoning),
        }


@dataclass(frozen=True)
class ConstructibilityVerdict:
    verdict: str  # Constructible | NotConstructible | Unknown
    reason: str
    degree: int
    irreducibility: IrreducibilityVerdict | None = None

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "degree": self.degree,
            "irreducibility": self.irreducibility.as_dict() if self.irreducibility else None,
        }


def clear_denominators(f: PolyQ) -> PolyQ:
    """Integer-primitive multiple of ``f`` with positive leading coefficient."""
    if not f:
        raise ValueError("zero polynomial")
    return PolyQ(primitive_part(f)[1])


def _int_coeffs(f) -> list[int]:
    if isinstance(f, PolyQ):
        if any(c.denominator != 1 for c in f.coeffs):
            raise ValueError("expected integer coefficients; use clear_denominators first")
        return [int(c) for c in f.coeffs]
    return [int(c) for c in f]


def _prime_factors(n: int, trial_limit: int = 10**6) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n and d <= trial_limit:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1 and (d * d > n or is_prime(n)):
        out.append(n)
    return out


def eisenstein_check(f) -> int | None:
    """Smallest prime making ``f`` Eisenstein, or None (which proves nothing)."""
    a = _int_coeffs(f)
    if len(a) < 2:
        raise ValueError("Eisenstein needs degree >= 1")
    lower = a[:-1]
    if a[0] == 0:
        return None
    g = 0
    for c in lower:
        g = math.gcd(g, c)
    for p in _prime_factors(g):
        if a[-1] % p and a[0] % (p * p):
            return p
    return None


def ddf_cycle_type(fp: PolyModP, expected_degree: int | None = None) -> CycleType:
    """Factor degrees of a squarefree polynomial over GF(p) by distinct-degree factorization."""
    p = fp.modulus
    if expected_degree is not None and fp.degree != expected_degree:
        raise DegreeDropped(f"degree dropped from {expected_degree} to {fp.degree} mod {p}")
    f = fp.monic()
    if f.degree < 1:
        return CycleType(p, ())
    if f.gcd(f.derivative()).degree > 0:
        raise NotSquarefree(f"f is not squarefree mod {p}")
    x = PolyModP(p, [0, 1], check_prime=False)
    degrees: list[int] = []
    h = x
    d = 0
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            degrees.append(f.degree)
            break
        h = h.powmod(p, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            degrees.extend([d] * (g.degree // d))
            f = f // g
            h = h % f
    return CycleType(p, tuple(degrees))


def cycle_types(f: PolyQ, prime_bound: int = DEFAULT_PRIME_BOUND) -> list[CycleType]:
    """Cycle types at every prime <= bound not dividing lc or the discriminant."""
    F = _int_coeffs(clear_denominators(f))
    disc = discriminant(PolyQ(F))
    n = len(F) - 1
    out = []
    for p in primes_up_to(prime_bound):
        if F[-1] % p == 0 or disc.numerator % p == 0:
            continue
        out.append(ddf_cycle_type(PolyModP(p, F, check_prime=False), n))
    return out


def _subset_sums(degrees) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def irreducible_over_Q(f: PolyQ, prime_bound: int = DEFAULT_PRIME_BOUND,
                       _cycles: list[CycleType] | None = None) -> IrreducibilityVerdict:
    """Try Eisenstein, then an irreducible reduction, then the factor-degree sieve."""
    if f.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if f.degree == 1:
        return IrreducibilityVerdict(True, "linear", "degree 1")
    F = clear_denominators(f)
    p = eisenstein_check(F)
    if p is not None:
        return IrreducibilityVerdict(True, "eisenstein", f"Eisenstein at p = {p}")
    n = f.degree
    if discriminant(F) == 0:
        return IrreducibilityVerdict(False, "none", "repeated roots over Q (gcd(f, f') nontrivial)")
    cycles = _cycles if _cycles is not None else cycle_types(f, prime_bound)
    for ct in cycles:
        if ct.degrees == (n,):
            return IrreducibilityVerdict(True, "irreducible-mod-p", f"irreducible mod {ct.prime}", (ct,))
    possible = set(range(1, n))
    used = []
    for ct in cycles:
        used.append(ct)
        possible &= _subset_sums(ct.degrees)
        if not possible:
            primes = ", ".join(str(c.prime) for c in used)
            return IrreducibilityVerdict(
                True, "degree-sieve",
                f"no proper factor degree is compatible with the cycle types at p in {{{primes}}}",
                tuple(used),
            )
    return IrreducibilityVerdict(
        False, "none",
        f"no certificate with primes <= {prime_bound}; surviving factor degrees {sorted(possible)}",
        tuple(cycles),
    )


def _long_prime_cycle_lengths(n: int) -> list[int]:
    # Primes q with n/2 < q <= n - 3: transitive + q-cycle gives primitive, then Jordan gives A_n.
    return [q for q in range(n // 2 + 1, n - 2) if is_prime(q) and 2 * q > n]


def symmetric_group_certificate(f: PolyQ, prime_bound: int = DEFAULT_PRIME_BOUND) -> GaloisCertificate:
    """Certify Gal(f/Q) = S_n from irreducibility, a long prime cycle and the discriminant."""
    n = f.degree
    if n < 2:
        raise ValueError("degree must be at least 2")
    F = clear_denominators(f)
    disc = discriminant(F)
    square = is_square(disc)
    cycles = cycle_types(f, prime_bound) if disc != 0 else []
    irr = irreducible_over_Q(f, prime_bound, cycles)
    primes = tuple(ct.prime for ct in cycles)
    reasons: list[str] = []

    def cert(verdict, pc=None, q=None):
        return GaloisCertificate(verdict, n, irr, tuple(cycles), pc, q, disc, square, primes, tuple(reasons))

    if not irr.irreducible:
        reasons.append("irreducibility not certified, so transitivity is unproven")
        return cert("Inconclusive")
    reasons.append(f"irreducible over Q ({irr.witness}), so the group is transitive")
    if n == 2:
        reasons.append("degree 2: a transitive group is S_2")
        return cert("SymmetricGroup")
    if n == 3:
        if square:
            reasons.append("degree 3 with square discriminant: the group is A_3")
            return cert("ContainsAlternating")
        reasons.append("degree 3 with non-square discriminant: the group is S_3")
        return cert("SymmetricGroup")
    pc = q = None
    for ct in cycles:
        for length in _long_prime_cycle_lengths(n):
            if ct.has_cycle(length):
                pc, q = ct, length
                break
        if pc:
            break
    if pc is None:
        reasons.append(f"no prime cycle of length in ({n / 2:g}, {n - 2}) among {len(cycles)} primes")
        return cert("Inconclusive")
    reasons.append(
        f"cycle type {list(pc.degrees)} at p = {pc.prime} (Dedekind) gives a power that is a {q}-cycle; "
        f"since {q} > n/2 the transitive group is primitive"
    )
    reasons.append(f"a primitive group containing a {q}-cycle with {q} <= n - 3 contains A_{n} (Jordan)")
    if square:
        reasons.append("discriminant is a rational square, so the group lies in A_n")
        return cert("ContainsAlternating", pc, q)
    reasons.append("discriminant is not a rational square, so the group is not inside A_n; hence S_n")
    return cert("SymmetricGroup", pc, q)


def constructibility_verdict(f: PolyQ, prime_bound: int = DEFAULT_PRIME_BOUND) -> ConstructibilityVerdict:
    """Ruler-and-compass verdict for a root of ``f`` taken as its minimal polynomial candidate."""
    n = f.degree
    if n < 1:
        raise ValueError("need degree >= 1")
    if n <= 2:
        return ConstructibilityVerdict(
            "Constructible", f"degree {n}: the root lies in an extension of degree <= 2", n
        )
    irr = irreducible_over_Q(f, prime_bound)
    power_of_two = n & (n - 1) == 0
    if irr.irreducible and not power_of_two:
        return ConstructibilityVerdict(
            "NotConstructible",
            f"irreducible of degree {n} ({irr.witness}); constructible numbers have power-of-2 degree",
            n, irr,
        )
    if not irr.irreducible:
        return ConstructibilityVerdict("Unknown", f"irreducibility not certified: {irr.witness}", n, irr)
    return ConstructibilityVerdict(
        "Unknown", f"degree {n} is a power of 2, which is necessary but not sufficient", n, irr
    )


@dataclass(frozen=True)
class RadicalReport:
    verdict: str  # NotRadical | NotApplicable | Inconclusive
    bisectors: tuple[Fraction, Fraction, Fraction]
    invariants: tuple[Fraction, Fraction, Fraction]
    wolff: PolyQ
    certificate: GaloisCertificate | None
    rational_root: Fraction | None
    inradius: float | None
    simultaneity: dict
    notes: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "bisectors": [str(x) for x in self.bisectors],
            "invariants": {k: str(v) for k, v in zip(("a2", "a3", "a4"), self.invariants)},
            "wolff_coefficients": [str(c) for c in self.wolff.coeffs],
            "certificate": self.certificate.as_dict() if self.certificate else None,
            "rational_root": None if self.rational_root is None else str(self.rational_root),
            "inradius": self.inradius,
            "simultaneity": self.simultaneity,
            "notes": list(self.notes),
        }


def _simultaneity_evidence(l_a, l_b, l_c, a2: float, a3: float) -> tuple[float, dict]:
    """Numerical side of the r / p / S equivalence.

    From 4 a2 r^2 p^2 - 8 a3 r^3 p^2 = r^2 + p^2 one gets
    p^2 = r^2 / (4 a2 r^2 - 8 a3 r^3 - 1) and S = p r, so each of r, p, S is
    obtained from any other by field operations and at most one square root
    (or a quartic, going from S back to r).
    """
    from .inversesolver import solve_from_bisectors
    from .trianglecore import area_heron, semiperimeter

    tri = solve_from_bisectors(float(l_a), float(l_b), float(l_c)).triangle
    S = area_heron(*tri.sides)
    p = semiperimeter(*tri.sides)
    r = S / p
    p_from_r = r / math.sqrt(4 * a2 * r * r - 8 * a3 * r**3 - 1)
    return r, {
        "r": r,
        "p": p,
        "S": S,
        "p_from_r": p_from_r,
        "p_relative_error": abs(p_from_r - p) / p,
        "S_from_r": p_from_r * r,
        "argument": [
            "p^2 (4 a2 r^2 - 8 a3 r^3 - 1) = r^2, so p is r over a square root of a rational function of r",
            "S = p r, so r and p give S by a product",
            "substituting p = S / r gives a quartic for r over Q(a2, a3, S), solvable in radicals",
            "hence r, S and p are all expressible in radicals or none is",
        ],
    }


def radical_solvability_report(l_a, l_b, l_c, prime_bound: int = DEFAULT_PRIME_BOUND) -> RadicalReport:
    """Decide, with evidence, whether r, S and p escape radical expressions over Q."""
    from .trianglecore import symmetric_invariants
    from .wolff import wolff_polynomial

    ls = tuple(to_rational(x) for x in (l_a, l_b, l_c))
    inv = symmetric_invariants(*ls)
    W = wolff_polynomial(*inv.as_tuple())
    r, simult = _simultaneity_evidence(*ls, float(inv.a2), float(inv.a3))
    notes = []
    root = Fraction(1 / (2 * r)).limit_denominator(10**9)
    if W(root) == 0:
        notes.append(
            f"1/(2r) = {root} is a rational root of W, so W is reducible here and r is rational; "
            "irreducibility over the invariant field does not carry over to this specialization"
        )
        return RadicalReport("NotApplicable", ls, inv.as_tuple(), W, None, root, r, simult, tuple(notes))
    cert = symmetric_group_certificate(W, prime_bound)
    if cert.verdict in ("SymmetricGroup", "ContainsAlternating") and W.degree >= 5:
        group = "S_10" if cert.verdict == "SymmetricGroup" else "A_10"
        notes.append(f"Gal(W/Q) = {group}, which is not solvable")
        notes.append("W is irreducible and 1/(2r) is one of its roots, so 1/(2r) and r are not expressible in radicals over Q")
        notes.append("by the r / p / S equivalence, neither S nor p is expressible in radicals over Q")
        return RadicalReport("NotRadical", ls, inv.as_tuple(), W, cert, None, r, simult, tuple(notes))
    notes.append(f"certificate verdict {cert.verdict}; no radical claim is made")
    return RadicalReport("Inconclusive", ls, inv.as_tuple(), W, cert, None, r, simult, tuple(notes))
